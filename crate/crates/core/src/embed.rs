//! Backtracking subgraph (monomorphism) search over bit-row hosts.
//!
//! Pattern vertices are placed in a fixed search order: highest degree
//! first, then repeatedly the vertex with the most already-placed
//! neighbours (ties by degree, then index). Host candidates for each
//! position are the intersection of the host rows of the images of its
//! placed neighbours, tried in increasing label order, so the first
//! embedding found is the least one along the search order.

use crate::bits::{bit, bits, low_mask};
use crate::graph::Graph;

/// A pattern graph prepared for repeated searches.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    /// Placement order of pattern vertices.
    order: Vec<usize>,
    /// For each position, the earlier positions it must be adjacent to.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: &Graph) -> Self {
        Self::with_prefix(graph, &[])
    }

    /// Search order that starts with the given pattern vertices.
    pub fn with_prefix(graph: &Graph, prefix: &[usize]) -> Self {
        let n = graph.order();
        let mut order: Vec<usize> = prefix.to_vec();
        let mut placed: u64 = prefix.iter().fold(0, |m, &v| m | bit(v));
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| placed & bit(v) == 0)
                .max_by(|&a, &b| {
                    let ka = (graph.neighbors(a) & placed).count_ones();
                    let kb = (graph.neighbors(b) & placed).count_ones();
                    ka.cmp(&kb)
                        .then(graph.degree(a).cmp(&graph.degree(b)))
                        .then(b.cmp(&a))
                })
                .unwrap();
            order.push(next);
            placed |= bit(next);
        }
        let mut position = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                bits(graph.neighbors(v))
                    .map(|u| position[u])
                    .filter(|&q| q < p)
                    .collect()
            })
            .collect();
        Pattern {
            graph: graph.clone(),
            degree: graph.degrees(),
            order,
            back,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Pattern vertices in placement order.
    pub fn search_order(&self) -> &[usize] {
        &self.order
    }
}

/// Search statistics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedStats {
    pub nodes: u64,
}

/// Finds an embedding of `pattern` into the host given by `rows`
/// (`rows.len()` vertices). Positions `0..pins.len()` of the search order
/// are forced to the given host vertices. Returns `map[pattern vertex] =
/// host vertex`.
pub fn find_embedding(rows: &[u64], pattern: &Pattern, pins: &[usize]) -> Option<Vec<usize>> {
    let mut stats = EmbedStats::default();
    find_embedding_counted(rows, pattern, pins, &mut stats)
}

pub fn find_embedding_counted(
    rows: &[u64],
    pattern: &Pattern,
    pins: &[usize],
    stats: &mut EmbedStats,
) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_embedding(rows, pattern, pins, stats, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Calls `visit` with each embedding in search order until it returns
/// `false`.
pub fn for_each_embedding(
    rows: &[u64],
    pattern: &Pattern,
    pins: &[usize],
    stats: &mut EmbedStats,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let p = pattern.order.len();
    let host_n = rows.len();
    if p > host_n || pins.len() > p {
        return;
    }
    if p == 0 {
        visit(&[]);
        return;
    }
    let all = low_mask(host_n);
    // Host vertices with enough degree for each pattern position.
    let fit: Vec<u64> = pattern
        .order
        .iter()
        .map(|&v| {
            let need = pattern.degree[v] as u32;
            (0..host_n)
                .filter(|&h| rows[h].count_ones() >= need)
                .fold(0, |m, h| m | bit(h))
        })
        .collect();
    let mut image = vec![0usize; p];
    for (i, &h) in pins.iter().enumerate() {
        if h >= host_n || fit[i] & bit(h) == 0 {
            return;
        }
        for &q in &pattern.back[i] {
            if rows[h] & bit(pins[q]) == 0 {
                return;
            }
        }
        if pins[..i].contains(&h) {
            return;
        }
        image[i] = h;
    }
    let used = pins.iter().fold(0u64, |m, &h| m | bit(h));
    let mut map = vec![0usize; p];
    let mut ctx = Ctx {
        rows,
        pattern,
        fit: &fit,
        all,
        image,
        map: &mut map,
        stats,
        visit,
    };
    ctx.go(pins.len(), used);
}

struct Ctx<'a> {
    rows: &'a [u64],
    pattern: &'a Pattern,
    fit: &'a [u64],
    all: u64,
    image: Vec<usize>,
    map: &'a mut Vec<usize>,
    stats: &'a mut EmbedStats,
    visit: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl Ctx<'_> {
    /// Returns `false` once the visitor asked to stop.
    fn go(&mut self, pos: usize, used: u64) -> bool {
        self.stats.nodes += 1;
        let p = self.pattern.order.len();
        if pos == p {
            for (i, &v) in self.pattern.order.iter().enumerate() {
                self.map[v] = self.image[i];
            }
            let map = self.map.clone();
            return (self.visit)(&map);
        }
        let mut cand = self.all & !used & self.fit[pos];
        for &q in &self.pattern.back[pos] {
            cand &= self.rows[self.image[q]];
        }
        for h in bits(cand) {
            self.image[pos] = h;
            if !self.go(pos + 1, used | bit(h)) {
                return false;
            }
        }
        true
    }
}

/// All automorphisms of `g` (as vertex maps), found as embeddings of `g`
/// into itself.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let pat = Pattern::new(g);
    let mut out = Vec::new();
    let mut stats = EmbedStats::default();
    for_each_embedding(g.rows(), &pat, &[], &mut stats, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Orbit representatives of `g`'s vertices (least vertex of each orbit).
pub fn vertex_orbit_reps(g: &Graph, autos: &[Vec<usize>]) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| autos.iter().all(|a| a[v] >= v))
        .collect()
}

/// Orbit representatives of ordered pairs `(a, b)` with `a ~ b`.
pub fn arc_orbit_reps(g: &Graph, autos: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let arcs: Vec<(usize, usize)> = (0..g.order())
        .flat_map(|a| bits(g.neighbors(a)).map(move |b| (a, b)))
        .collect();
    arcs.iter()
        .copied()
        .filter(|&(a, b)| autos.iter().all(|m| (m[a], m[b]) >= (a, b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, fan, FanSpec};

    #[test]
    fn triangle_in_complete() {
        let k5 = complete(5);
        let pat = Pattern::new(&complete(3));
        assert_eq!(find_embedding(k5.rows(), &pat, &[]), Some(vec![0, 1, 2]));
    }

    #[test]
    fn no_odd_cycle_in_bipartite() {
        let host = complete_multipartite(&[6, 6]);
        for k in [3, 5, 7] {
            let pat = Pattern::new(&cycle(k).unwrap());
            assert!(find_embedding(host.rows(), &pat, &[]).is_none());
        }
        let pat = Pattern::new(&cycle(6).unwrap());
        assert!(find_embedding(host.rows(), &pat, &[]).is_some());
    }

    #[test]
    fn pins_are_respected() {
        let host = cycle(5).unwrap();
        let pat = Pattern::with_prefix(&crate::graph::path(3), &[1, 0]);
        let m = find_embedding(host.rows(), &pat, &[3, 2]).unwrap();
        assert_eq!((m[1], m[0]), (3, 2));
        assert!(find_embedding(host.rows(), &pat, &[3, 0]).is_none());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&complete(4)).len(), 24);
        assert_eq!(automorphisms(&cycle(5).unwrap()).len(), 10);
        assert_eq!(automorphisms(&fan(FanSpec::new(2, 2).unwrap())).len(), 8);
        let c5 = cycle(5).unwrap();
        let autos = automorphisms(&c5);
        assert_eq!(vertex_orbit_reps(&c5, &autos), vec![0]);
        assert_eq!(arc_orbit_reps(&c5, &autos), vec![(0, 1)]);
        let f = fan(FanSpec::new(2, 2).unwrap());
        let autos = automorphisms(&f);
        assert_eq!(vertex_orbit_reps(&f, &autos), vec![0, 1]);
        assert_eq!(arc_orbit_reps(&f, &autos), vec![(0, 1), (1, 0), (1, 2)]);
    }
}
