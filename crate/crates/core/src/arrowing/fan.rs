//! Blue `K_1 + n K_t` detection: pick a centre, then pack `n` disjoint
//! `t`-cliques into its blue neighbourhood.
//!
//! Packing always decides the least available vertex first: either it is
//! the least vertex of a blade (blade minima therefore increase) or it is
//! left out. Failed `(available set, blades left)` states are memoized.

use std::collections::HashSet;

use crate::bits::{bit, bits, low_mask};
use crate::graph::FanSpec;

/// Blades found around one centre.
pub type Blades = Vec<Vec<usize>>;

/// Searches for the fan centred at `center` in the graph given by `rows`.
pub fn fan_at_center(rows: &[u64], center: usize, spec: FanSpec) -> Option<Blades> {
    let nb = rows[center];
    if (nb.count_ones() as usize) < spec.n * spec.t {
        return None;
    }
    let mut memo = Memo::default();
    let mut out = Vec::with_capacity(spec.n);
    pack(rows, nb, spec.n, spec.t, &mut memo, &mut out).then_some(out)
}

/// First centre (in increasing order) among `centers` carrying a fan.
pub fn find_fan(rows: &[u64], spec: FanSpec, centers: u64) -> Option<(usize, Blades)> {
    bits(centers).find_map(|c| fan_at_center(rows, c, spec).map(|b| (c, b)))
}

#[derive(Default)]
struct Memo {
    failed: HashSet<(u64, usize)>,
}

fn pack(rows: &[u64], avail: u64, remaining: usize, t: usize, memo: &mut Memo, out: &mut Blades) -> bool {
    if remaining == 0 {
        return true;
    }
    if (avail.count_ones() as usize) < remaining * t {
        return false;
    }
    if remaining > 1 && memo.failed.contains(&(avail, remaining)) {
        return false;
    }
    let u = avail.trailing_zeros() as usize;
    let higher = avail & !low_mask(u + 1);
    let cand = higher & rows[u];
    let mut clique = vec![u];
    let found = extend_clique(rows, cand, t - 1, &mut clique, &mut |cl| {
        let used = cl.iter().fold(0u64, |m, &v| m | bit(v));
        out.push(cl.to_vec());
        if pack(rows, avail & !used, remaining - 1, t, memo, out) {
            return true;
        }
        out.pop();
        false
    });
    if found || pack(rows, higher, remaining, t, memo, out) {
        return true;
    }
    if remaining > 1 {
        memo.failed.insert((avail, remaining));
    }
    false
}

/// Extends `clique` by `need` more vertices from `cand` in lexicographic
/// order, calling `done` on each completed clique until it returns true.
fn extend_clique(
    rows: &[u64],
    cand: u64,
    need: usize,
    clique: &mut Vec<usize>,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if need == 0 {
        return done(clique);
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    for v in bits(cand) {
        let next = cand & !low_mask(v + 1) & rows[v];
        clique.push(v);
        if extend_clique(rows, next, need - 1, clique, done) {
            return true;
        }
        clique.pop();
    }
    false
}
