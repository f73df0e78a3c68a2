//! Edge-by-edge colouring search with incremental pruning.
//!
//! Edges are coloured in a fixed order, red before blue. A colour is
//! rejected as soon as it completes a red `G` or a blue target through
//! the new edge. With vertex-orbit pruning, clique vertices `a < b` that
//! are interchangeable given the rows already coloured (same host class,
//! same colours to every earlier row) must satisfy `colour(i, a) <=
//! colour(i, b)` in the order red < blue, for the current row `i`. Under
//! lexicographic order this keeps exactly one member of each orbit of the
//! host's clique automorphisms acting row by row.

use std::time::Instant;

use super::checker::Checker;
use super::parallel::{run_units, Unit};
use super::{EdgeOrder, SearchStats};
use crate::arrowing::{Color, HostGraph, TwoColoring};
use crate::bits::{bit, low_mask};
use crate::error::{Error, Result};

pub(crate) struct EdgeSearch<'a> {
    pub host: HostGraph,
    pub red: &'a Checker,
    pub blue: &'a Checker,
    pub edge_order: EdgeOrder,
    pub symmetry: bool,
    pub prefix_depth: usize,
    pub workers: usize,
    pub budget: u64,
    pub deadline: Option<Instant>,
}

#[derive(Clone)]
struct State {
    red: Vec<u64>,
    blue: Vec<u64>,
}

enum Flow {
    Continue,
    Stop,
}

struct Walk<'a, 'b> {
    search: &'b EdgeSearch<'a>,
    edges: Vec<(usize, usize)>,
    /// Host class: clique vertices adjacent to the pendant are class 1.
    class: Vec<u8>,
    clique: usize,
}

pub(crate) fn ordered_edges(host: HostGraph, order: EdgeOrder) -> Vec<(usize, usize)> {
    let mut edges = host.edges();
    if order == EdgeOrder::Colexicographic {
        let m = host.clique_order();
        edges.sort_by_key(|&(u, v)| (v >= m, v, u));
    }
    edges
}

impl EdgeSearch<'_> {
    /// The first colouring in search order with neither monochromatic
    /// target, or `None` when every colouring has one.
    pub fn run(&self) -> Result<(Option<TwoColoring>, SearchStats)> {
        let n = self.host.order();
        let clique = self.host.clique_order();
        let class = (0..n)
            .map(|v| match self.host {
                HostGraph::StarBook { k, .. } if v < k => 1,
                _ => 0,
            })
            .collect();
        let walk = Walk {
            search: self,
            edges: ordered_edges(self.host, self.edge_order),
            class,
            clique,
        };
        let depth = self.prefix_depth.min(walk.edges.len());
        let mut prefix_stats = SearchStats::default();
        let mut prefixes = Vec::new();
        let root = State {
            red: vec![0; n],
            blue: vec![0; n],
        };
        walk.descend(&mut root.clone(), 0, depth, &mut prefix_stats, &mut |st| {
            prefixes.push(st.clone());
            Flow::Continue
        })?;
        let merged = run_units(prefixes.len(), self.workers, self.budget.saturating_sub(prefix_stats.nodes), |i| {
            let mut st = prefixes[i].clone();
            let mut stats = SearchStats {
                work_units: 1,
                ..Default::default()
            };
            let mut found = None;
            let outcome = walk
                .descend(&mut st, depth, walk.edges.len(), &mut stats, &mut |leaf| {
                    found = Some(leaf.clone());
                    Flow::Stop
                })
                .map(|_| found.map(|s| TwoColoring::from_rows_unchecked(self.host, s.red, s.blue)));
            Unit { stats, outcome }
        });
        let merged = match merged {
            Err(Error::BudgetExhausted { nodes }) => {
                return Err(Error::BudgetExhausted {
                    nodes: nodes + prefix_stats.nodes,
                })
            }
            other => other?,
        };
        let mut stats = prefix_stats;
        stats += merged.stats;
        Ok((merged.hit, stats))
    }
}

impl Walk<'_, '_> {
    fn descend(
        &self,
        st: &mut State,
        idx: usize,
        limit: usize,
        stats: &mut SearchStats,
        leaf: &mut dyn FnMut(&State) -> Flow,
    ) -> Result<Flow> {
        if idx == limit {
            return Ok(leaf(st));
        }
        let (u, v) = self.edges[idx];
        for color in [Color::Red, Color::Blue] {
            stats.nodes += 1;
            if stats.nodes > self.search.budget {
                return Err(Error::BudgetExhausted { nodes: stats.nodes });
            }
            if stats.nodes & 0xfff == 0 {
                if let Some(d) = self.search.deadline {
                    if Instant::now() >= d {
                        return Err(Error::BudgetExhausted { nodes: stats.nodes });
                    }
                }
            }
            if self.search.symmetry && self.breaks_order(st, u, v, color) {
                stats.symmetry_rejections += 1;
                continue;
            }
            let (rows, checker) = match color {
                Color::Red => (&mut st.red, self.search.red),
                Color::Blue => (&mut st.blue, self.search.blue),
            };
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            let pruned = checker.through_edge(rows, u, v);
            if !pruned {
                if let Flow::Stop = self.descend(st, idx + 1, limit, stats, leaf)? {
                    return Ok(Flow::Stop);
                }
            } else {
                stats.prunes += 1;
            }
            let rows = match color {
                Color::Red => &mut st.red,
                Color::Blue => &mut st.blue,
            };
            rows[u] &= !bit(v);
            rows[v] &= !bit(u);
        }
        Ok(Flow::Continue)
    }

    /// Red on `(i, j)` after blue on `(i, j-1)` for interchangeable `j-1`
    /// and `j`.
    fn breaks_order(&self, st: &State, i: usize, j: usize, color: Color) -> bool {
        if color != Color::Red || j >= self.clique || j < i + 2 {
            return false;
        }
        let a = j - 1;
        st.blue[i] & bit(a) != 0
            && self.class[a] == self.class[j]
            && (st.red[a] ^ st.red[j]) & low_mask(i) == 0
    }
}
