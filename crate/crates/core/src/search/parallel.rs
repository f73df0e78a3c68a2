//! Ordered work units with a deterministic first-hit merge.
//!
//! Units run in any order on any number of threads, but the merged result
//! is always the one a sequential left-to-right scan would produce: stats
//! cover units up to and including the first unit that stopped (hit or
//! error), and nothing after it.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::SearchStats;
use crate::error::{Error, Result};

pub(crate) struct Unit<T> {
    pub stats: SearchStats,
    pub outcome: Result<Option<T>>,
}

impl<T> Unit<T> {
    fn stops(&self) -> bool {
        !matches!(self.outcome, Ok(None))
    }
}

pub(crate) struct Merged<T> {
    pub stats: SearchStats,
    pub hit: Option<T>,
}

/// Runs `count` units and merges them in index order. The merge fails
/// with `BudgetExhausted` if a unit before the first hit failed or the
/// merged node count exceeds `budget`.
pub(crate) fn run_units<T, F>(count: usize, workers: usize, budget: u64, run: F) -> Result<Merged<T>>
where
    T: Send,
    F: Fn(usize) -> Unit<T> + Sync,
{
    let results: Vec<Option<Unit<T>>> = if workers <= 1 || count <= 1 {
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let u = run(i);
            let stop = u.stops();
            out.push(Some(u));
            if stop {
                break;
            }
        }
        out
    } else {
        let cutoff = AtomicUsize::new(usize::MAX);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..count)
                .into_par_iter()
                .map(|i| {
                    if i > cutoff.load(Ordering::Relaxed) {
                        return None;
                    }
                    let u = run(i);
                    if u.stops() {
                        cutoff.fetch_min(i, Ordering::Relaxed);
                    }
                    Some(u)
                })
                .collect()
        })
    };

    let mut stats = SearchStats::default();
    for unit in results {
        let unit = unit.expect("units before the first stop always run");
        stats += unit.stats;
        match unit.outcome {
            Ok(None) => {}
            Ok(Some(hit)) => {
                check_budget(&stats, budget)?;
                return Ok(Merged { stats, hit: Some(hit) });
            }
            Err(Error::BudgetExhausted { .. }) => return Err(Error::BudgetExhausted { nodes: stats.nodes }),
            Err(e) => return Err(e),
        }
    }
    check_budget(&stats, budget)?;
    Ok(Merged { stats, hit: None })
}

/// Ordered parallel map; the output order never depends on `workers`.
pub(crate) fn map_ordered<T, F>(count: usize, workers: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if workers <= 1 || count <= 1 {
        return Ok((0..count).map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(|| (0..count).into_par_iter().map(&f).collect()))
}

fn check_budget(stats: &SearchStats, budget: u64) -> Result<()> {
    if stats.nodes > budget {
        Err(Error::BudgetExhausted { nodes: stats.nodes })
    } else {
        Ok(())
    }
}
