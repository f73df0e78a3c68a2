//! Canonical labelling by individualization-refinement.
//!
//! Cells are kept as an ordered list of vertex masks. Refinement splits
//! every cell by the number of neighbours in a splitter cell, ordering the
//! pieces by that count, which keeps the procedure label-invariant. Leaves
//! of the search tree are compared by their relabelled adjacency rows and
//! the lexicographically largest one wins. Interchangeable twins inside the
//! target cell are only individualized once.

use crate::bits::{bit, bits};
use crate::graph::Graph;

/// Canonical form of `g` and the labelling that produces it
/// (`labelling[v]` is the new label of `v`).
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    canonical_form_colored(g, &[])
}

/// Canonical form respecting an initial vertex colouring: vertices with
/// smaller colour receive smaller labels. An empty slice means uncoloured.
pub fn canonical_form_colored(g: &Graph, colors: &[usize]) -> (Graph, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let mut cells: Vec<u64> = if colors.is_empty() {
        vec![g.vertex_mask()]
    } else {
        assert_eq!(colors.len(), n);
        let maxc = *colors.iter().max().unwrap();
        (0..=maxc)
            .map(|c| (0..n).filter(|&v| colors[v] == c).fold(0, |m, v| m | bit(v)))
            .filter(|&m| m != 0)
            .collect()
    };
    refine(g, &mut cells);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (rows, order) = best.expect("search visits at least one leaf");
    let mut labelling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labelling[v] = pos;
    }
    (Graph::from_rows(rows).expect("relabelled graph is valid"), labelling)
}

/// Canonical representative only.
pub fn canonical(g: &Graph) -> Graph {
    canonical_form(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degrees().iter().copied().fold(vec![0; a.order()], |mut h, d| {
            h[d] += 1;
            h
        }) == b.degrees().iter().copied().fold(vec![0; b.order()], |mut h, d| {
            h[d] += 1;
            h
        })
        && canonical(a) == canonical(b)
}

fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell.count_ones() > 1 {
                    let pieces = split_by_count(g, cell, splitter);
                    if pieces.len() > 1 {
                        let k = pieces.len();
                        cells.splice(c..=c, pieces);
                        changed = true;
                        c += k;
                        continue;
                    }
                }
                c += 1;
            }
            s += 1;
        }
    }
}

fn split_by_count(g: &Graph, cell: u64, splitter: u64) -> Vec<u64> {
    let mut buckets: [u64; 65] = [0; 65];
    let mut lo = 64;
    let mut hi = 0;
    for v in bits(cell) {
        let d = (g.neighbors(v) & splitter).count_ones() as usize;
        buckets[d] |= bit(v);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if lo == hi {
        return vec![cell];
    }
    buckets[lo..=hi].iter().copied().filter(|&m| m != 0).collect()
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    g.neighbors(a) & !bit(b) == g.neighbors(b) & !bit(a)
}

fn search(g: &Graph, cells: Vec<u64>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(g.neighbors(v)).fold(0u64, |m, u| m | bit(pos[u])))
            .collect();
        if best.as_ref().is_none_or(|(b, _)| rows > *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits(cell) {
        if tried.iter().any(|&w| are_twins(g, w, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(bit(v));
        next.push(cell & !bit(v));
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}
