//! Incremental containment tests. Each query assumes the graph without the
//! given edge (or without the edges at the given vertex) has no copy of
//! the pattern, and answers whether the full graph has one.

use crate::arrowing::fan::find_fan;
use crate::bits::{bit, bits};
use crate::embed::{arc_orbit_reps, automorphisms, find_embedding, vertex_orbit_reps, Pattern};
use crate::error::{invalid, Result};
use crate::graph::{FanSpec, Graph};
use crate::canon::is_isomorphic;

pub(crate) enum Checker {
    Triangle,
    Pattern {
        order: usize,
        /// One pattern per arc orbit `(a, b)`, searched with `a, b` placed
        /// first.
        arcs: Vec<Pattern>,
        /// One pattern per vertex orbit, searched with that vertex first.
        vertices: Vec<Pattern>,
    },
    Fan(FanSpec),
}

impl Checker {
    pub fn for_graph(g: &Graph) -> Result<Self> {
        if g.edge_count() == 0 {
            return Err(invalid("search patterns must have at least one edge"));
        }
        if is_isomorphic(g, &crate::graph::complete(3)) {
            return Ok(Checker::Triangle);
        }
        let autos = automorphisms(g);
        Ok(Checker::Pattern {
            order: g.order(),
            arcs: arc_orbit_reps(g, &autos)
                .into_iter()
                .map(|(a, b)| Pattern::with_prefix(g, &[a, b]))
                .collect(),
            vertices: vertex_orbit_reps(g, &autos)
                .into_iter()
                .map(|a| Pattern::with_prefix(g, &[a]))
                .collect(),
        })
    }

    pub fn for_fan(spec: FanSpec) -> Self {
        Checker::Fan(spec)
    }

    /// A copy in `rows`, given none avoids the edge `uv`.
    pub fn through_edge(&self, rows: &[u64], u: usize, v: usize) -> bool {
        match self {
            Checker::Triangle => rows[u] & rows[v] != 0,
            Checker::Pattern { order, arcs, .. } => {
                *order <= rows.len() && arcs.iter().any(|p| find_embedding(rows, p, &[u, v]).is_some())
            }
            Checker::Fan(spec) => find_fan(rows, *spec, bit(u) | bit(v) | (rows[u] & rows[v])).is_some(),
        }
    }

    /// A copy in `rows`, given none avoids the vertex `w`.
    pub fn through_vertex(&self, rows: &[u64], w: usize) -> bool {
        match self {
            Checker::Triangle => bits(rows[w]).any(|x| rows[x] & rows[w] != 0),
            Checker::Pattern { order, vertices, .. } => {
                *order <= rows.len() && vertices.iter().any(|p| find_embedding(rows, p, &[w]).is_some())
            }
            Checker::Fan(spec) => find_fan(rows, *spec, bit(w) | rows[w]).is_some(),
        }
    }
}
