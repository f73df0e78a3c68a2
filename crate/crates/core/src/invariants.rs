//! Chromatic invariants: `χ(G)`, `s(G)`, `τ(G)`, edge-criticality and the
//! critical colouring with a singleton last class.
//!
//! All routines are exact and deterministic. They refuse graphs above a
//! size limit (default [`DEFAULT_MAX_ORDER`]) since the searches are
//! exponential in the worst case.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, bits, low_mask};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_ORDER: usize = 24;

/// A partition of the vertex set into non-empty independent classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperColoring {
    classes: Vec<Vec<usize>>,
}

impl ProperColoring {
    /// Builds and validates a colouring of `g`.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self> {
        let c = ProperColoring { classes };
        c.validate(g)?;
        Ok(c)
    }

    fn from_labels(labels: &[usize], k: usize) -> Self {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| c[0]);
        ProperColoring { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_mask(&self, i: usize) -> u64 {
        self.classes[i].iter().fold(0, |m, &v| m | bit(v))
    }

    /// Checks disjointness, cover, independence and non-emptiness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = 0u64;
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(invalid(format!("class {i} is empty")));
            }
            for &v in class {
                if v >= g.order() {
                    return Err(invalid(format!("vertex {v} out of range")));
                }
                if seen & bit(v) != 0 {
                    return Err(invalid(format!("vertex {v} in two classes")));
                }
                seen |= bit(v);
            }
            let m = self.class_mask(i);
            if !g.is_independent(m) {
                return Err(invalid(format!("class {i} is not independent")));
            }
        }
        if seen != g.vertex_mask() {
            return Err(invalid("classes do not cover the vertex set"));
        }
        Ok(())
    }
}

/// Output of [`critical_coloring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalWitness {
    /// Proper `χ`-colouring whose last class is the singleton `{vertex}`.
    pub coloring: ProperColoring,
    /// The critical edge `(u, v)`, `u < v`.
    pub edge: (usize, usize),
    /// The endpoint moved into its own class.
    pub vertex: usize,
    /// Class holding the other endpoint; `vertex` has exactly one edge into it.
    pub low_class: usize,
}

impl CriticalWitness {
    /// Re-checks every property the witness promises.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.coloring.validate(g)?;
        let (u, v) = self.edge;
        if !g.has_edge(u, v) || (self.vertex != u && self.vertex != v) {
            return Err(invalid("witness edge/vertex mismatch"));
        }
        let k = self.coloring.num_classes();
        if self.coloring.classes[k - 1] != [self.vertex] {
            return Err(invalid("last class is not the singleton witness vertex"));
        }
        if self.low_class + 1 >= k {
            return Err(invalid("low class index out of range"));
        }
        let into = (g.neighbors(self.vertex) & self.coloring.class_mask(self.low_class)).count_ones();
        if into != 1 {
            return Err(invalid(format!("{into} edges into the low class, expected 1")));
        }
        let (chi, _) = chromatic_number(g)?;
        if k != chi {
            return Err(invalid("colouring does not use χ classes"));
        }
        let mut h = g.clone();
        h.remove_edge(u, v);
        if chromatic_number(&h)?.0 + 1 != chi {
            return Err(invalid("edge is not critical"));
        }
        Ok(())
    }
}

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeLimit {
            order: g.order(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Largest clique size (branch and bound on bit sets).
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            grow(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    grow(g, 0, g.vertex_mask(), &mut best);
    best
}

/// Exact `k`-colourability by DSatur-ordered backtracking. Returns colour
/// labels per vertex.
fn dsatur_color(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    struct St<'a> {
        g: &'a Graph,
        k: usize,
        color: Vec<usize>,
        // sat[v][c]: number of coloured neighbours of v with colour c
        sat: Vec<Vec<u8>>,
        uncolored: u64,
    }
    impl St<'_> {
        fn go(&mut self, max_used: usize) -> bool {
            if self.uncolored == 0 {
                return true;
            }
            let v = bits(self.uncolored)
                .max_by(|&a, &b| {
                    let sa = self.sat[a].iter().filter(|&&x| x > 0).count();
                    let sb = self.sat[b].iter().filter(|&&x| x > 0).count();
                    sa.cmp(&sb)
                        .then((self.g.neighbors(a) & self.uncolored).count_ones().cmp(
                            &(self.g.neighbors(b) & self.uncolored).count_ones(),
                        ))
                        .then(b.cmp(&a))
                })
                .unwrap();
            let limit = self.k.min(max_used + 1);
            for c in 0..limit {
                if self.sat[v][c] > 0 {
                    continue;
                }
                self.color[v] = c;
                self.uncolored &= !bit(v);
                for u in bits(self.g.neighbors(v)) {
                    self.sat[u][c] += 1;
                }
                if self.go(max_used.max(c + 1)) {
                    return true;
                }
                for u in bits(self.g.neighbors(v)) {
                    self.sat[u][c] -= 1;
                }
                self.uncolored |= bit(v);
            }
            false
        }
    }
    let mut st = St {
        g,
        k,
        color: vec![usize::MAX; n],
        sat: vec![vec![0; k]; n],
        uncolored: g.vertex_mask(),
    };
    st.go(0).then_some(st.color)
}

/// Visits proper colourings with exactly `k` classes in canonical form
/// (vertices in index order, a new colour only as `max used + 1`), i.e. in
/// lexicographic order of the label vector. Stops when `visit` returns false.
fn for_each_coloring(g: &Graph, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        labels: &mut Vec<usize>,
        class_masks: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = g.order();
        if v == n {
            return if used == k { visit(labels) } else { true };
        }
        if k - used > n - v {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if g.neighbors(v) & class_masks[c] != 0 {
                continue;
            }
            labels[v] = c;
            class_masks[c] |= bit(v);
            let keep = go(g, k, v + 1, used.max(c + 1), labels, class_masks, visit);
            class_masks[c] &= !bit(v);
            if !keep {
                return false;
            }
        }
        true
    }
    let mut labels = vec![0; g.order()];
    let mut masks = vec![0u64; k];
    go(g, k, 0, 0, &mut labels, &mut masks, visit);
}

/// `χ(G)` with a witness colouring, default size limit.
pub fn chromatic_number(g: &Graph) -> Result<(usize, ProperColoring)> {
    chromatic_number_limited(g, DEFAULT_MAX_ORDER)
}

pub fn chromatic_number_limited(g: &Graph, limit: usize) -> Result<(usize, ProperColoring)> {
    check_size(g, limit)?;
    if g.order() == 0 {
        return Ok((0, ProperColoring { classes: vec![] }));
    }
    let mut k = clique_number(g).max(1);
    loop {
        if let Some(labels) = dsatur_color(g, k) {
            return Ok((k, ProperColoring::from_labels(&labels, k)));
        }
        k += 1;
    }
}

fn is_colorable(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.order() == 0;
    }
    if clique_number(g) > k {
        return false;
    }
    dsatur_color(g, k).is_some()
}

/// Independent sets of exactly `size` vertices, lexicographic order.
fn for_each_independent_set(g: &Graph, size: usize, visit: &mut dyn FnMut(u64) -> bool) {
    fn go(g: &Graph, size: usize, chosen: u64, allowed: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if chosen.count_ones() as usize == size {
            return visit(chosen);
        }
        if (chosen.count_ones() + allowed.count_ones()) < size as u32 {
            return true;
        }
        for v in bits(allowed) {
            let rest = allowed & !low_mask(v + 1) & !g.neighbors(v);
            if !go(g, size, chosen | bit(v), rest, visit) {
                return false;
            }
        }
        true
    }
    go(g, size, 0, g.vertex_mask(), visit);
}

fn complement_vertices(g: &Graph, s: u64) -> Vec<usize> {
    bits(g.vertex_mask() & !s).collect()
}

fn require_chi_at_least_two(chi: usize) -> Result<()> {
    if chi < 2 {
        Err(invalid(format!("s and τ are undefined for χ = {chi} < 2")))
    } else {
        Ok(())
    }
}

/// `s(G)`: the least class size over proper `χ`-colourings. The witness
/// colouring has that class last.
pub fn s_of(g: &Graph) -> Result<(usize, ProperColoring)> {
    let (chi, _) = chromatic_number(g)?;
    require_chi_at_least_two(chi)?;
    for size in 1..=g.order() {
        let mut found = None;
        for_each_independent_set(g, size, &mut |s| {
            let rest = complement_vertices(g, s);
            let h = g.induced(&rest);
            if let Some(labels) = dsatur_color(&h, chi - 1) {
                found = Some((s, rest, labels));
                false
            } else {
                true
            }
        });
        if let Some((s, rest, labels)) = found {
            let mut classes = vec![Vec::new(); chi - 1];
            for (i, &c) in labels.iter().enumerate() {
                classes[c].push(rest[i]);
            }
            classes.sort_by_key(|c| c[0]);
            classes.push(bits(s).collect());
            return Ok((size, ProperColoring::new(g, classes)?));
        }
    }
    unreachable!("a χ-colouring has a class of size at most n")
}

/// `τ(G)`: over proper `χ`-colourings whose last class has size `s(G)`, the
/// least number of edges from a last-class vertex into another class. The
/// witness colouring realizes the minimum with the minimizing class last.
pub fn tau_of(g: &Graph) -> Result<(usize, ProperColoring)> {
    let (s, _) = s_of(g)?;
    let (chi, _) = chromatic_number(g)?;
    let mut best: Option<(usize, ProperColoring)> = None;
    for_each_independent_set(g, s, &mut |set| {
        let rest = complement_vertices(g, set);
        let h = g.induced(&rest);
        if !is_colorable(&h, chi - 1) {
            return true;
        }
        for_each_coloring(&h, chi - 1, &mut |labels| {
            let mut masks = vec![0u64; chi - 1];
            for (i, &c) in labels.iter().enumerate() {
                masks[c] |= bit(rest[i]);
            }
            let value = bits(set)
                .flat_map(|v| masks.iter().map(move |&m| (g.neighbors(v) & m).count_ones() as usize))
                .min()
                .unwrap();
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                let mut classes: Vec<Vec<usize>> = masks.iter().map(|&m| bits(m).collect()).collect();
                classes.push(bits(set).collect());
                best = Some((value, ProperColoring { classes }));
            }
            // τ >= 1 always holds, so 1 cannot be improved upon.
            best.as_ref().unwrap().0 > 1
        });
        best.as_ref().is_none_or(|(b, _)| *b > 1)
    });
    let (tau, coloring) = best.expect("s(G) is attained by some colouring");
    coloring.validate(g)?;
    Ok((tau, coloring))
}

/// Whether some edge `e` has `χ(G − e) = χ(G) − 1`; returns the
/// lexicographically least such edge.
pub fn is_edge_critical(g: &Graph) -> Result<Option<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Err(invalid("edge-criticality needs at least one edge"));
    }
    let (chi, _) = chromatic_number(g)?;
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        if is_colorable(&h, chi - 1) {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// Critical colouring: take the least critical edge `uv`, the least proper
/// `(χ−1)`-colouring of `G − uv` (where `u` and `v` necessarily share a
/// class) and move `u` into a new singleton class.
pub fn critical_coloring(g: &Graph) -> Result<CriticalWitness> {
    let (u, v) = is_edge_critical(g)?.ok_or(Error::NotEdgeCritical)?;
    let (chi, _) = chromatic_number(g)?;
    let mut h = g.clone();
    h.remove_edge(u, v);
    let mut first = None;
    for_each_coloring(&h, chi - 1, &mut |labels| {
        first = Some(labels.to_vec());
        false
    });
    let labels = first.ok_or_else(|| invalid("no (χ−1)-colouring of G − e"))?;
    debug_assert_eq!(labels[u], labels[v]);
    let mut classes = vec![Vec::new(); chi - 1];
    for (x, &c) in labels.iter().enumerate() {
        if x != u {
            classes[c].push(x);
        }
    }
    classes.sort_by_key(|c| c[0]);
    let low_class = classes.iter().position(|c| c.contains(&v)).unwrap();
    classes.push(vec![u]);
    let coloring = ProperColoring::new(g, classes)?;
    Ok(CriticalWitness {
        coloring,
        edge: (u, v),
        vertex: u,
        low_class,
    })
}

/// All invariants of a graph in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub order: usize,
    pub chi: usize,
    pub s: Option<usize>,
    pub tau: Option<usize>,
    pub edge_critical: bool,
    pub critical_edge: Option<(usize, usize)>,
    pub critical_coloring: Option<CriticalWitness>,
}

pub fn report(g: &Graph) -> Result<InvariantReport> {
    let (chi, _) = chromatic_number(g)?;
    let (s, tau) = if chi >= 2 {
        (Some(s_of(g)?.0), Some(tau_of(g)?.0))
    } else {
        (None, None)
    };
    let critical_edge = if g.edge_count() > 0 {
        is_edge_critical(g)?
    } else {
        None
    };
    let critical_coloring = match critical_edge {
        Some(_) => Some(critical_coloring(g)?),
        None => None,
    };
    Ok(InvariantReport {
        order: g.order(),
        chi,
        s,
        tau,
        edge_critical: critical_edge.is_some(),
        critical_edge,
        critical_coloring,
    })
}
