//! Undirected simple graphs stored as per-vertex neighbour bit rows.
//!
//! Vertices are labelled `0..order`. Every constructor documents its
//! labelling so that witnesses built on top of it are reproducible.

use std::fmt;

use crate::bits::{bit, bits, low_mask};
use crate::error::{invalid, Error, Result};

/// Largest supported order; one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

/// An undirected simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    ///
    /// # Panics
    /// Panics if `order > MAX_ORDER`.
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Graph {
            order,
            rows: vec![0; order],
        }
    }

    /// Builds a graph from neighbour rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::SizeLimit {
                order,
                limit: MAX_ORDER,
            });
        }
        let mask = low_mask(order);
        for (v, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(invalid(format!("row {v} has bits beyond order {order}")));
            }
            if r & bit(v) != 0 {
                return Err(invalid(format!("self-loop at vertex {v}")));
            }
            for u in bits(r) {
                if rows[u] & bit(v) == 0 {
                    return Err(invalid(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { order, rows })
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::SizeLimit {
                order,
                limit: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(invalid(format!("bad edge ({u},{v}) for order {order}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbour rows, one word per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.order)
            .map(|v| all & !self.rows[v] & !bit(v))
            .collect();
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut rows = vec![0u64; self.order];
        for v in 0..self.order {
            rows[perm[v]] = bits(self.rows[v]).fold(0, |m, u| m | bit(perm[u]));
        }
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Subgraph induced by `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = bits(frontier).fold(0, |m, v| m | self.rows[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `v` is a cut vertex.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        let before = self.components().len();
        self.induced(&keep).components().len() > before
    }

    pub fn has_cut_vertex(&self) -> bool {
        (0..self.order).any(|v| self.is_cut_vertex(v))
    }

    /// Whether the set `s` is independent.
    pub fn is_independent(&self, s: u64) -> bool {
        bits(s).all(|v| self.rows[v] & s == 0)
    }

    /// Whether the set `s` spans a clique.
    pub fn is_clique(&self, s: u64) -> bool {
        bits(s).all(|v| (self.rows[v] | bit(v)) & s == s)
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.order {
            let mut dist = vec![usize::MAX; self.order];
            let mut parent = vec![usize::MAX; self.order];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in bits(self.rows[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.order];
        for s in 0..self.order {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in bits(self.rows[u]) {
                    if side[w] == u8::MAX {
                        side[w] = side[u] ^ 1;
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        let edges: Vec<_> = self.edges().collect();
        write!(f, "{edges:?})")
    }
}

/// The generalized fan `K_1 + n K_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct FanSpec {
    /// Number of blades.
    pub n: usize,
    /// Order of each blade.
    pub t: usize,
}

impl FanSpec {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(invalid(format!("fan needs n,t >= 1 (got n={n}, t={t})")));
        }
        if n * t + 1 > MAX_ORDER {
            return Err(Error::SizeLimit {
                order: n * t + 1,
                limit: MAX_ORDER,
            });
        }
        Ok(FanSpec { n, t })
    }

    /// `n t + 1`.
    pub fn order(&self) -> usize {
        self.n * self.t + 1
    }
}

/// `K_k`.
pub fn complete(k: usize) -> Graph {
    let mut g = Graph::empty(k);
    let all = low_mask(k);
    for v in 0..k {
        g.rows[v] = all & !bit(v);
    }
    g
}

/// `C_k` on `0..k` with edges `i ~ i+1 (mod k)`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("cycle needs k >= 3, got {k}")));
    }
    let mut g = Graph::empty(k);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k);
    }
    Ok(g)
}

/// `P_k`: the path `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Graph {
    let mut g = Graph::empty(k);
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    g
}

/// `G + H`; vertices of `g` come first, then those of `h` shifted by `|g|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let a = g.order;
    let mut out = Graph::empty(a + h.order);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    for u in 0..a {
        for v in 0..h.order {
            out.add_edge(u, a + v);
        }
    }
    out
}

/// `n H`: copy `i` occupies vertices `i|H| .. (i+1)|H|`.
pub fn disjoint_union(n: usize, h: &Graph) -> Graph {
    let m = h.order;
    let mut out = Graph::empty(n * m);
    for i in 0..n {
        for (u, v) in h.edges() {
            out.add_edge(i * m + u, i * m + v);
        }
    }
    out
}

/// `K_1 + n K_t`: center is vertex 0, blade `i` is `1 + i t .. 1 + (i+1) t`.
pub fn fan(spec: FanSpec) -> Graph {
    join(&complete(1), &disjoint_union(spec.n, &complete(spec.t)))
}

/// Complete multipartite graph; parts are consecutive label ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let total: usize = parts.iter().sum();
    let mut g = complete(total);
    let mut start = 0;
    for &p in parts {
        for u in start..start + p {
            for v in u + 1..start + p {
                g.remove_edge(u, v);
            }
        }
        start += p;
    }
    g
}

/// Wheel `K_1 + C_k`; hub is vertex 0.
pub fn wheel(k: usize) -> Result<Graph> {
    Ok(join(&complete(1), &cycle(k)?))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        assert_eq!(complete(0).order(), 0);
        assert_eq!(complete(0).edge_count(), 0);
        let k4 = complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        assert_eq!(complete(9).edge_count(), 36);
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(3).unwrap(), complete(3));
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.girth(), Some(5));
        assert!(c5.is_connected());
        assert!(cycle(4).unwrap().is_bipartite());
        assert!(!c5.is_bipartite());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn joins_and_unions() {
        let f2 = join(&complete(1), &disjoint_union(2, &complete(2)));
        assert_eq!((f2.order(), f2.edge_count()), (5, 6));
        assert_eq!(join(&complete(1), &disjoint_union(1, &complete(2))), complete(3));
        let h = cycle(5).unwrap();
        assert_eq!(join(&Graph::empty(0), &h), h);

        let m = disjoint_union(3, &complete(2));
        assert_eq!((m.order(), m.edge_count()), (6, 3));
        assert!(m.degrees().iter().all(|&d| d == 1));
        assert_eq!(disjoint_union(1, &h), h);
        let two_tri = disjoint_union(2, &complete(3));
        assert_eq!((two_tri.order(), two_tri.edge_count()), (6, 6));
        assert_eq!(two_tri.components().len(), 2);
    }

    #[test]
    fn fans() {
        assert_eq!(fan(FanSpec::new(1, 2).unwrap()), complete(3));
        let f = fan(FanSpec::new(2, 2).unwrap());
        assert_eq!((f.order(), f.edge_count()), (5, 6));
        let f = fan(FanSpec::new(2, 3).unwrap());
        assert_eq!(f.order(), 7);
        assert_eq!(f.degree(0), 6);
        assert!((1..7).all(|v| f.degree(v) == 3));
        assert!(FanSpec::new(0, 2).is_err());
    }

    #[test]
    fn counts_for_small_parameters() {
        for n in 1..=6 {
            for t in 1..=6 {
                let h = complete(t);
                let u = disjoint_union(n, &h);
                assert_eq!(u.order(), n * t);
                assert_eq!(u.edge_count(), n * t * (t - 1) / 2);
                let f = fan(FanSpec::new(n, t).unwrap());
                assert_eq!(f.order(), n * t + 1);
                assert_eq!(f.edge_count(), n * t * (t - 1) / 2 + n * t);
                assert_eq!(f.degree(0), n * t);
                let j = join(&u, &h);
                assert_eq!(j.edge_count(), u.edge_count() + h.edge_count() + n * t * t);
            }
        }
    }

    #[test]
    fn fan_center_removal_leaves_blades() {
        for n in 1..=5 {
            for t in 1..=5 {
                let f = fan(FanSpec::new(n, t).unwrap());
                let rest: Vec<usize> = (1..f.order()).collect();
                let comps = f.induced(&rest).components();
                assert_eq!(comps.len(), n);
                let g = f.induced(&rest);
                for c in comps {
                    assert_eq!(c.count_ones() as usize, t);
                    assert!(g.is_clique(c));
                }
            }
        }
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b1]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn cut_vertices() {
        assert!(fan(FanSpec::new(2, 2).unwrap()).has_cut_vertex());
        assert!(!complete(3).has_cut_vertex());
        assert!(path(3).is_cut_vertex(1));
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(p.girth(), Some(5));
    }
}
