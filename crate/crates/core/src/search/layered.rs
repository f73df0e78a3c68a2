//! Vertex-by-vertex generation of red graphs up to isomorphism.
//!
//! Layer `m+1` extends every class of layer `m` by a new vertex with every
//! possible red neighbourhood, drops children with a red `G` or blue target
//! through the new vertex, and keeps one canonical form per class. Both
//! properties are hereditary, so layer `N` holds exactly the red graphs of
//! the good colourings of `K_N`, one per isomorphism class.

use std::collections::BTreeSet;
use std::time::Instant;

use super::checker::Checker;
use super::parallel::{map_ordered, run_units, Unit};
use super::SearchStats;
use crate::arrowing::{HostGraph, TwoColoring};
use crate::bits::{bit, bits, low_mask};
use crate::canon::canonical;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) struct Layered<'a> {
    pub red: &'a Checker,
    pub blue: Option<&'a Checker>,
    pub workers: usize,
    pub budget: u64,
    pub deadline: Option<Instant>,
}

fn complement_rows(rows: &[u64]) -> Vec<u64> {
    let all = low_mask(rows.len());
    rows.iter().enumerate().map(|(v, r)| all & !r & !bit(v)).collect()
}

impl Layered<'_> {
    fn keeps(&self, red: &[u64], blue: &[u64], w: usize) -> bool {
        !self.red.through_vertex(red, w) && self.blue.is_none_or(|b| !b.through_vertex(blue, w))
    }

    fn check_limits(&self, stats: &SearchStats) -> Result<()> {
        let late = matches!(self.deadline, Some(d) if Instant::now() >= d);
        if late || stats.nodes > self.budget {
            return Err(Error::BudgetExhausted { nodes: stats.nodes });
        }
        Ok(())
    }

    /// Canonical red graphs of order `order` with neither target, sorted.
    pub fn classes(&self, order: usize) -> Result<(Vec<Graph>, SearchStats)> {
        let mut stats = SearchStats::default();
        if order == 0 {
            return Ok((vec![Graph::empty(0)], stats));
        }
        let mut layer = vec![Graph::empty(1)];
        for m in 1..order {
            let results = map_ordered(layer.len(), self.workers, |i| self.extend(&layer[i], m))?;
            let mut next = BTreeSet::new();
            for (st, children) in results {
                stats += st;
                for g in children {
                    if !next.insert(g) {
                        stats.canonical_rejections += 1;
                    }
                }
            }
            self.check_limits(&stats)?;
            layer = next.into_iter().collect();
            if layer.is_empty() {
                break;
            }
        }
        Ok((layer, stats))
    }

    fn extend(&self, parent: &Graph, m: usize) -> (SearchStats, Vec<Graph>) {
        let mut st = SearchStats {
            work_units: 1,
            ..Default::default()
        };
        let mut out = Vec::new();
        let mut red: Vec<u64> = parent.rows().to_vec();
        red.push(0);
        for nb in 0..(1u64 << m) {
            st.nodes += 1;
            let mut child = red.clone();
            child[m] = nb;
            for x in bits(nb) {
                child[x] |= bit(m);
            }
            let blue = if self.blue.is_some() { complement_rows(&child) } else { Vec::new() };
            if !self.keeps(&child, &blue, m) {
                st.prunes += 1;
                continue;
            }
            st.candidates += 1;
            out.push(canonical(&Graph::from_rows(child).expect("valid rows")));
        }
        (st, out)
    }

    /// First good colouring of `host`, searching classes of the clique
    /// part in sorted order, then pendant neighbourhood placements, then
    /// pendant colourings.
    pub fn first_good(&self, host: HostGraph) -> Result<(Option<TwoColoring>, SearchStats)> {
        let (m, k) = match host {
            HostGraph::Complete { n } => (n, None),
            HostGraph::StarBook { m, k } => (m, Some(k)),
        };
        let (classes, mut stats) = self.classes(m)?;
        let Some(k) = k else {
            let hit = match classes.first() {
                Some(g) if g.order() == m => Some(TwoColoring::from_red_graph(host, g)?),
                _ => None,
            };
            return Ok((hit, stats));
        };
        if classes.first().is_none_or(|g| g.order() != m) {
            return Ok((None, stats));
        }
        let remaining = self.budget.saturating_sub(stats.nodes);
        let merged = run_units(classes.len(), self.workers, remaining, |i| self.pendant_unit(host, &classes[i], m, k));
        let merged = match merged {
            Err(Error::BudgetExhausted { nodes }) => {
                return Err(Error::BudgetExhausted {
                    nodes: nodes + stats.nodes,
                })
            }
            other => other?,
        };
        stats += merged.stats;
        Ok((merged.hit, stats))
    }

    fn pendant_unit(&self, host: HostGraph, g: &Graph, m: usize, k: usize) -> Unit<TwoColoring> {
        let mut st = SearchStats {
            work_units: 1,
            ..Default::default()
        };
        let all = low_mask(m);
        let mut subset = low_mask(k);
        loop {
            // Relabel so that `subset` becomes 0..k, order preserved.
            let mut perm = vec![0; m];
            for (new, old) in bits(subset).chain(bits(all & !subset)).enumerate() {
                perm[old] = new;
            }
            let base = g.relabel(&perm);
            let mut red: Vec<u64> = base.rows().to_vec();
            red.push(0);
            let mut blue = complement_rows(&red);
            blue[m] = 0;
            for v in 0..m {
                blue[v] &= all;
            }
            for p in 0..(1u64 << k) {
                st.nodes += 1;
                if st.nodes > self.budget {
                    return Unit {
                        stats: st,
                        outcome: Err(Error::BudgetExhausted { nodes: st.nodes }),
                    };
                }
                let q = low_mask(k) & !p;
                let (mut r, mut b) = (red.clone(), blue.clone());
                r[m] = p;
                b[m] = q;
                for x in bits(p) {
                    r[x] |= bit(m);
                }
                for x in bits(q) {
                    b[x] |= bit(m);
                }
                if !self.keeps(&r, &b, m) {
                    st.prunes += 1;
                    continue;
                }
                return Unit {
                    stats: st,
                    outcome: Ok(Some(TwoColoring::from_rows_unchecked(host, r, b))),
                };
            }
            if subset == 0 || k == m {
                break;
            }
            // Next k-subset in increasing numeric order.
            let c = subset & subset.wrapping_neg();
            let r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
            if subset & !all != 0 {
                break;
            }
        }
        Unit {
            stats: st,
            outcome: Ok(None),
        }
    }
}
