//! Explicit lower-bound colourings.
//!
//! Vertex classes are consecutive label ranges. Edges inside a class are
//! blue, edges between classes are red, so the red graph is complete
//! multipartite and every blue component is a clique.

use std::ops::Range;

use crate::arrowing::{Color, HostGraph, TwoColoring};
use crate::error::{invalid, Result};
use crate::graph::MAX_ORDER;

/// Class ranges of the Burr colouring: `χ-1` classes of size `h-1`
/// followed by one class of size `s-1`.
pub fn burr_classes(chi: usize, s: usize, h: usize) -> Result<Vec<Range<usize>>> {
    if chi < 2 || s < 1 || h < s {
        return Err(invalid("need chi >= 2 and h >= s >= 1"));
    }
    let mut out = Vec::with_capacity(chi);
    let mut next = 0;
    for size in std::iter::repeat(h - 1).take(chi - 1).chain([s - 1]) {
        if size > 0 {
            out.push(next..next + size);
        }
        next += size;
    }
    Ok(out)
}

fn class_of(classes: &[Range<usize>], v: usize) -> usize {
    classes.iter().position(|r| r.contains(&v)).unwrap_or(classes.len())
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(crate::Error::SizeLimit {
            order,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

/// Colouring of `K_{(χ-1)(h-1)+s-1}` with no red graph of chromatic number
/// `χ` and no blue connected graph on `h` vertices.
pub fn burr_coloring(chi: usize, s: usize, h: usize) -> Result<TwoColoring> {
    let classes = burr_classes(chi, s, h)?;
    let order = (chi - 1) * (h - 1) + s - 1;
    check_order(order)?;
    let c = TwoColoring::from_fn(HostGraph::complete(order)?, |u, v| {
        if class_of(&classes, u) == class_of(&classes, v) {
            Color::Blue
        } else {
            Color::Red
        }
    })?;
    debug_assert!(postconditions::blue_components_below(&c, h));
    debug_assert!(s > 1 || postconditions::red_colorable(&c, chi - 1));
    Ok(c)
}

/// `k` classes of `nt` vertices on `K_{knt}`: no red `K_{k+1}`, no blue
/// `K_1 + nK_t`.
pub fn ramsey_witness_fan(k: usize, t: usize, n: usize) -> Result<TwoColoring> {
    params(k, t, n)?;
    burr_coloring(k + 1, 1, n * t + 1)
}

/// Colouring of `K_{knt} ⊔ K_{1,(k-1)nt+t-1}`: the Ramsey witness on the
/// clique, with the pendant red to classes `1..k-1` and blue to the least
/// `t-1` vertices of the last class.
pub fn star_witness_fan(k: usize, t: usize, n: usize) -> Result<TwoColoring> {
    params(k, t, n)?;
    let m = k * n * t;
    let pendant_degree = (k - 1) * n * t + t - 1;
    check_order(m + 1)?;
    let base = ramsey_witness_fan(k, t, n)?;
    let last_class = (k - 1) * n * t;
    let c = TwoColoring::from_fn(HostGraph::star_book(m, pendant_degree)?, |u, v| {
        if v == m {
            if u < last_class {
                Color::Red
            } else {
                Color::Blue
            }
        } else {
            base.color(u, v).expect("clique edge")
        }
    })?;
    debug_assert!(postconditions::red_colorable(&c, k));
    debug_assert!(postconditions::no_blue_fan(&c, t, n));
    Ok(c)
}

fn params(k: usize, t: usize, n: usize) -> Result<()> {
    if k < 1 || t < 1 || n < 1 {
        return Err(invalid("need k, t, n >= 1"));
    }
    Ok(())
}

mod postconditions {
    use crate::arrowing::{contains_blue_fan, TwoColoring};
    use crate::graph::{FanSpec, Graph};
    use crate::invariants::chromatic_number_limited;

    pub fn blue_components_below(c: &TwoColoring, h: usize) -> bool {
        c.blue_graph()
            .components()
            .iter()
            .all(|m| (m.count_ones() as usize) < h)
    }

    pub fn red_colorable(c: &TwoColoring, k: usize) -> bool {
        let red: Graph = c.red_graph();
        red.edge_count() == 0 || matches!(chromatic_number_limited(&red, 64), Ok((chi, _)) if chi <= k)
    }

    pub fn no_blue_fan(c: &TwoColoring, t: usize, n: usize) -> bool {
        contains_blue_fan(c, FanSpec::new(n, t).expect("valid fan")).is_neither()
    }
}
