//! Partition diagnostics for near-extremal colourings.
//!
//! A red graph close to complete `k`-partite is split into classes
//! minimizing the deficiency: red edges inside classes plus missing red
//! edges between classes. Core sets keep the vertices whose red degree into
//! every other class is nearly full; the report evaluates the structural
//! statements expected of extremal colourings on each class.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrowing::TwoColoring;
use crate::bits::{bit, bits};
use crate::error::{invalid, Result};
use crate::graph::FanSpec;

/// Default tolerance.
pub const DEFAULT_XI: f64 = 0.01;
/// Hosts up to this order are partitioned exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionMetrics {
    pub class_sizes: Vec<usize>,
    /// Red edges inside each class.
    pub internal_red: Vec<u64>,
    /// `missing_cross[i][j]`: non-red pairs between classes `i` and `j`.
    pub missing_cross: Vec<Vec<u64>>,
    pub deficiency: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityPartition {
    /// Classes sorted by least vertex; empty classes last.
    pub classes: Vec<Vec<usize>>,
    pub xi: f64,
    pub metrics: PartitionMetrics,
}

impl StabilityPartition {
    /// Builds from class labels, recomputing the metrics.
    pub fn from_labels(c: &TwoColoring, labels: &[usize], k: usize, xi: f64) -> Result<Self> {
        if labels.len() != c.order() || labels.iter().any(|&l| l >= k) {
            return Err(invalid("labels must assign every vertex a class below k"));
        }
        if !(xi > 0.0 && xi < 1.0) {
            return Err(invalid("xi must lie in (0, 1)"));
        }
        let labels = normalize(labels);
        let mut classes = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            classes[l].push(v);
        }
        let metrics = metrics(c, &classes);
        Ok(StabilityPartition { classes, xi, metrics })
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn labels(&self) -> Vec<usize> {
        let n = self.classes.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (i, cl) in self.classes.iter().enumerate() {
            for &v in cl {
                out[v] = i;
            }
        }
        out
    }

    /// Checks that the classes partition the vertex set and that the
    /// metrics match the colouring.
    pub fn validate(&self, c: &TwoColoring) -> Result<()> {
        let mut seen = 0u64;
        for &v in self.classes.iter().flatten() {
            if v >= c.order() || seen & bit(v) != 0 {
                return Err(invalid("classes do not partition the vertices"));
            }
            seen |= bit(v);
        }
        if seen.count_ones() as usize != c.order() {
            return Err(invalid("classes do not cover the vertices"));
        }
        if metrics(c, &self.classes) != self.metrics {
            return Err(invalid("stale partition metrics"));
        }
        Ok(())
    }
}

/// Relabels so that classes appear in order of their least vertex.
fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut map: Vec<Option<usize>> = Vec::new();
    let mut next = 0;
    labels
        .iter()
        .map(|&l| {
            if map.len() <= l {
                map.resize(l + 1, None);
            }
            *map[l].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

fn metrics(c: &TwoColoring, classes: &[Vec<usize>]) -> PartitionMetrics {
    let red = c.red_rows();
    let masks: Vec<u64> = classes.iter().map(|cl| cl.iter().fold(0, |m, &v| m | bit(v))).collect();
    let k = classes.len();
    let internal_red: Vec<u64> = masks
        .iter()
        .map(|&m| bits(m).map(|v| (red[v] & m).count_ones() as u64).sum::<u64>() / 2)
        .collect();
    let mut missing_cross = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let present: u64 = bits(masks[i]).map(|v| (red[v] & masks[j]).count_ones() as u64).sum();
                missing_cross[i][j] = classes[i].len() as u64 * classes[j].len() as u64 - present;
            }
        }
    }
    let cross: u64 = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| missing_cross[i][j]).sum();
    PartitionMetrics {
        class_sizes: classes.iter().map(Vec::len).collect(),
        deficiency: internal_red.iter().sum::<u64>() + cross,
        internal_red,
        missing_cross,
    }
}

/// Deficiency of a labelling, from scratch.
fn deficiency(red: &[u64], labels: &[usize], k: usize) -> u64 {
    let n = labels.len();
    let mut sizes = vec![0u64; k];
    let mut internal = 0u64;
    let mut cross_red = 0u64;
    for u in 0..n {
        sizes[labels[u]] += 1;
        for v in bits(red[u]).filter(|&v| v > u) {
            if labels[u] == labels[v] {
                internal += 1;
            } else {
                cross_red += 1;
            }
        }
    }
    let total: u64 = sizes.iter().sum();
    let pairs = (total * total - sizes.iter().map(|s| s * s).sum::<u64>()) / 2;
    internal + pairs - cross_red
}

/// Deficiency-minimizing partition of `c`'s vertices into `k` classes:
/// exhaustive up to [`EXHAUSTIVE_LIMIT`] vertices, otherwise best of
/// `restarts` seeded hill climbs. Ties go to the lexicographically least
/// normalized labelling.
pub fn optimize_partition(c: &TwoColoring, k: usize, restarts: usize, seed: u64, xi: f64) -> Result<StabilityPartition> {
    if k < 2 {
        return Err(invalid("need at least two classes"));
    }
    let labels = if c.order() <= EXHAUSTIVE_LIMIT {
        exhaustive_labels(c.red_rows(), k)
    } else {
        let runs: Vec<(u64, Vec<usize>)> = (0..restarts.max(1))
            .into_par_iter()
            .map(|r| hill_climb(c.red_rows(), k, seed.wrapping_add(r as u64)))
            .collect();
        runs.into_iter().min().expect("at least one restart").1
    };
    StabilityPartition::from_labels(c, &labels, k, xi)
}

/// Minimum over all labellings with classes numbered by first appearance.
fn exhaustive_labels(red: &[u64], k: usize) -> Vec<usize> {
    let n = red.len();
    let mut labels = vec![0usize; n];
    let mut best: Option<(u64, Vec<usize>)> = None;
    fn rec(red: &[u64], k: usize, i: usize, used: usize, labels: &mut Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
        if i == labels.len() {
            let d = deficiency(red, labels, k);
            if best.as_ref().is_none_or(|(b, _)| d < *b) {
                *best = Some((d, labels.clone()));
            }
            return;
        }
        for l in 0..(used + 1).min(k) {
            labels[i] = l;
            rec(red, k, i + 1, used.max(l + 1), labels, best);
        }
    }
    if n == 0 {
        return labels;
    }
    rec(red, k, 0, 0, &mut labels, &mut best);
    best.expect("nonempty search").1
}

fn hill_climb(red: &[u64], k: usize, seed: u64) -> (u64, Vec<usize>) {
    let n = red.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut masks = vec![0u64; k];
    for (v, &l) in labels.iter().enumerate() {
        masks[l] |= bit(v);
    }
    loop {
        let mut moved = false;
        for v in 0..n {
            let a = labels[v];
            let da = (red[v] & masks[a]).count_ones() as i64;
            let size_a = masks[a].count_ones() as i64;
            // Moving v from a to b changes the deficiency by
            // 2(d_b - d_a) + |V_a| - 1 - |V_b|.
            let best = (0..k)
                .filter(|&b| b != a)
                .map(|b| {
                    let db = (red[v] & masks[b]).count_ones() as i64;
                    (2 * (db - da) + size_a - 1 - masks[b].count_ones() as i64, b)
                })
                .min();
            if let Some((delta, b)) = best {
                if delta < 0 {
                    masks[a] &= !bit(v);
                    masks[b] |= bit(v);
                    labels[v] = b;
                    moved = true;
                }
            }
        }
        if !moved {
            break;
        }
    }
    let labels = normalize(&labels);
    (deficiency(red, &labels, k), labels)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreSets {
    pub xi: f64,
    /// `1 - 2√ξ`.
    pub factor: f64,
    pub sets: Vec<Vec<usize>>,
}

/// `V_i'`: vertices of `V_i` with red degree at least `(1 - 2√ξ)|V_j|`
/// into every other class `V_j`.
pub fn core_sets(c: &TwoColoring, p: &StabilityPartition) -> CoreSets {
    let factor = 1.0 - 2.0 * p.xi.sqrt();
    let red = c.red_rows();
    let masks: Vec<u64> = p.classes.iter().map(|cl| cl.iter().fold(0, |m, &v| m | bit(v))).collect();
    let sets = p
        .classes
        .iter()
        .enumerate()
        .map(|(i, cl)| {
            cl.iter()
                .copied()
                .filter(|&x| {
                    (0..masks.len())
                        .filter(|&j| j != i)
                        .all(|j| (red[x] & masks[j]).count_ones() as f64 >= factor * masks[j].count_ones() as f64)
                })
                .collect()
        })
        .collect();
    CoreSets { xi: p.xi, factor, sets }
}

/// Per-class outcome of the structural predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassChecks {
    pub size: usize,
    pub core_size: usize,
    /// `|V_i'| >= (1 - 2k√ξ)|V_i|`.
    pub core_large: bool,
    /// Blue is complete on `V_i'`.
    pub core_blue_clique: bool,
    /// Every pair between `V_i'` and `V_i \ V_i'` is blue.
    pub boundary_blue: bool,
    /// `|V_i| = nt`.
    pub size_is_nt: bool,
    /// Blue is complete on `V_i \ V_i'`.
    pub outside_core_blue_clique: bool,
}

impl ClassChecks {
    pub fn all(&self) -> bool {
        self.core_large && self.core_blue_clique && self.boundary_blue && self.size_is_nt && self.outside_core_blue_clique
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimsReport {
    pub k: usize,
    pub xi: f64,
    pub spec: FanSpec,
    pub classes: Vec<ClassChecks>,
    pub all_pass: bool,
}

/// Evaluates the structural predicates class by class.
pub fn claims_report(c: &TwoColoring, p: &StabilityPartition, cores: &CoreSets, spec: FanSpec) -> ClaimsReport {
    let blue = c.blue_rows();
    let k = p.k();
    let blue_clique = |m: u64| bits(m).all(|v| blue[v] & m == m & !bit(v));
    let classes: Vec<ClassChecks> = p
        .classes
        .iter()
        .zip(&cores.sets)
        .map(|(cl, core)| {
            let all = cl.iter().fold(0u64, |m, &v| m | bit(v));
            let inner = core.iter().fold(0u64, |m, &v| m | bit(v));
            let outer = all & !inner;
            ClassChecks {
                size: cl.len(),
                core_size: core.len(),
                core_large: core.len() as f64 >= (1.0 - 2.0 * k as f64 * p.xi.sqrt()) * cl.len() as f64,
                core_blue_clique: blue_clique(inner),
                boundary_blue: bits(inner).all(|v| blue[v] & outer == outer),
                size_is_nt: cl.len() == spec.n * spec.t,
                outside_core_blue_clique: blue_clique(outer),
            }
        })
        .collect();
    ClaimsReport {
        k,
        xi: p.xi,
        spec,
        all_pass: classes.iter().all(ClassChecks::all),
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::{Color, HostGraph};
    use crate::constructions::{ramsey_witness_fan, star_witness_fan};
    use proptest::prelude::{prop_assert, prop_assert_eq, proptest};

    fn brute_min(red: &[u64], k: usize) -> u64 {
        let n = red.len();
        let mut best = u64::MAX;
        let mut labels = vec![0; n];
        for code in 0..(k as u64).pow(n as u32) {
            let mut x = code;
            for l in labels.iter_mut() {
                *l = (x % k as u64) as usize;
                x /= k as u64;
            }
            // Direct count, independent of the closed form.
            let mut d = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let r = red[u] & bit(v) != 0;
                    if (labels[u] == labels[v]) == r {
                        d += 1;
                    }
                }
            }
            best = best.min(d);
        }
        best
    }

    fn random_coloring(n: usize, seed: u64) -> TwoColoring {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        TwoColoring::from_fn(HostGraph::Complete { n }, |_, _| {
            if rng.gen_bool(0.5) {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap()
    }

    #[test]
    fn recovers_bipartite_witness() {
        let c = ramsey_witness_fan(2, 2, 3).unwrap();
        let p = optimize_partition(&c, 2, 8, 0, DEFAULT_XI).unwrap();
        assert_eq!(p.classes, vec![(0..6).collect::<Vec<_>>(), (6..12).collect()]);
        assert_eq!(p.metrics.internal_red, vec![0, 0]);
        assert_eq!(p.metrics.deficiency, 0);
    }

    #[test]
    fn recovers_tripartite_witness() {
        let c = ramsey_witness_fan(3, 2, 2).unwrap();
        let p = optimize_partition(&c, 3, 8, 0, DEFAULT_XI).unwrap();
        assert_eq!(p.metrics.class_sizes, vec![4, 4, 4]);
        assert_eq!(p.metrics.deficiency, 0);
        // Large witnesses go through the hill climb.
        let c = ramsey_witness_fan(3, 3, 3).unwrap();
        let p = optimize_partition(&c, 3, 8, 0, DEFAULT_XI).unwrap();
        assert_eq!(p.metrics.deficiency, 0);
        p.validate(&c).unwrap();
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        for seed in 0..6 {
            let c = random_coloring(9, seed);
            for k in [2, 3] {
                let p = optimize_partition(&c, k, 1, 0, DEFAULT_XI).unwrap();
                assert_eq!(p.metrics.deficiency, brute_min(c.red_rows(), k));
            }
        }
    }

    #[test]
    fn core_sets_of_witnesses() {
        let c = ramsey_witness_fan(2, 2, 3).unwrap();
        let p = optimize_partition(&c, 2, 4, 0, 0.03).unwrap();
        assert_eq!(core_sets(&c, &p).sets, p.classes);
        let x = 0;
        let mut d = c.clone();
        for y in 6..12 {
            d.set(x, y, Color::Blue).unwrap();
        }
        let p = StabilityPartition::from_labels(&d, &c_labels(12), 2, DEFAULT_XI).unwrap();
        assert!(!core_sets(&d, &p).sets[0].contains(&x));
    }

    fn c_labels(n: usize) -> Vec<usize> {
        (0..n).map(|v| usize::from(v >= n / 2)).collect()
    }

    #[test]
    fn witness_claims() {
        for k in 2..4 {
            for t in 2..4 {
                for n in 1..4 {
                    let spec = FanSpec::new(n, t).unwrap();
                    let c = ramsey_witness_fan(k, t, n).unwrap();
                    let p = optimize_partition(&c, k, 8, 0, DEFAULT_XI).unwrap();
                    let r = claims_report(&c, &p, &core_sets(&c, &p), spec);
                    assert!(r.all_pass, "k={k} t={t} n={n}");
                }
            }
        }
        let spec = FanSpec::new(2, 2).unwrap();
        let c = star_witness_fan(2, 2, 2).unwrap().restrict_to_clique();
        let p = optimize_partition(&c, 2, 8, 0, DEFAULT_XI).unwrap();
        let r = claims_report(&c, &p, &core_sets(&c, &p), spec);
        assert!(r.classes.iter().all(|cl| cl.core_blue_clique && cl.boundary_blue && cl.size_is_nt));
    }

    #[test]
    fn all_red_fails_core_clique() {
        let c = TwoColoring::from_fn(HostGraph::Complete { n: 8 }, |_, _| Color::Red).unwrap();
        let p = optimize_partition(&c, 2, 4, 0, DEFAULT_XI).unwrap();
        let r = claims_report(&c, &p, &core_sets(&c, &p), FanSpec::new(2, 2).unwrap());
        assert!(!r.all_pass);
        assert!(r.classes.iter().any(|cl| !cl.core_blue_clique));
    }

    proptest! {
        #[test]
        fn partition_metrics_recompute(seed in 0u64..1000, k in 2usize..4) {
            let c = random_coloring(10, seed);
            let p = optimize_partition(&c, k, 2, seed, DEFAULT_XI).unwrap();
            p.validate(&c).unwrap();
            prop_assert_eq!(deficiency(c.red_rows(), &p.labels(), k), p.metrics.deficiency);
        }

        #[test]
        fn core_sets_monotone_in_xi(seed in 0u64..1000, a in 0.001f64..0.2, b in 0.001f64..0.2) {
            let c = random_coloring(11, seed);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let p = optimize_partition(&c, 2, 1, 0, lo).unwrap();
            let q = StabilityPartition { xi: hi, ..p.clone() };
            let small = core_sets(&c, &p);
            let large = core_sets(&c, &q);
            for (s, l) in small.sets.iter().zip(&large.sets) {
                prop_assert!(s.iter().all(|v| l.contains(v)));
            }
        }

        #[test]
        fn core_membership_recount(seed in 0u64..1000) {
            let c = random_coloring(10, seed);
            let p = optimize_partition(&c, 2, 1, 0, 0.05).unwrap();
            let cores = core_sets(&c, &p);
            for (i, cl) in p.classes.iter().enumerate() {
                let other = &p.classes[1 - i];
                for &x in cl {
                    let d = other.iter().filter(|&&y| c.color(x, y) == Some(Color::Red)).count();
                    let member = d as f64 >= (1.0 - 2.0 * 0.05f64.sqrt()) * other.len() as f64;
                    prop_assert_eq!(cores.sets[i].contains(&x), member);
                }
            }
        }
    }
}
