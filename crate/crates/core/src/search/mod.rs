//! Exhaustive arrowing search with certificates.
//!
//! `arrows` decides whether every red/blue colouring of a host contains a
//! red `G` or a blue target. A `false` answer comes with a counterexample
//! colouring that can be checked independently; a `true` answer comes
//! with an exhaustion digest (search statistics plus a hash of the
//! configuration that produced them). Results, counterexamples and digests
//! do not depend on the number of workers.

mod checker;
mod dfs;
mod layered;
mod parallel;

use std::ops::AddAssign;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arrowing::validate::validate_neither;
use crate::arrowing::{BlueTarget, ColoringFile, HostGraph, TwoColoring, BLUE_PATTERN_LIMIT};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use checker::Checker;

/// Default cap on host order.
pub const DEFAULT_MAX_HOST_ORDER: usize = 13;
/// Largest order accepted by [`triangle_free_graphs`].
pub const TRIANGLE_FREE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeOrder {
    /// Row by row; pendant edges last.
    #[default]
    Lexicographic,
    /// Column by column (vertex by vertex); pendant edges last.
    Colexicographic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryMode {
    /// Plain edge search.
    None,
    /// Edge search restricted to row-wise sorted colourings.
    VertexOrbit,
    /// Vertex-by-vertex generation of red graphs up to isomorphism.
    CanonicalAugmentation,
    /// Canonical augmentation when `G` is a triangle, vertex-orbit
    /// otherwise.
    #[default]
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub edge_order: EdgeOrder,
    pub symmetry: SymmetryMode,
    /// Worker threads; `0` and `1` both mean sequential.
    pub workers: usize,
    /// Cap on search nodes, summed over all work units.
    pub node_budget: u64,
    /// Wall-clock cap. Unlike the node budget this makes exhaustion
    /// timing-dependent.
    pub time_budget: Option<Duration>,
    /// Edges coloured before splitting into work units.
    pub prefix_depth: usize,
    pub max_host_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            edge_order: EdgeOrder::Lexicographic,
            symmetry: SymmetryMode::Auto,
            workers: 1,
            node_budget: 1 << 34,
            time_budget: None,
            prefix_depth: 12,
            max_host_order: DEFAULT_MAX_HOST_ORDER,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_symmetry(mut self, symmetry: SymmetryMode) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchStats {
    /// Colour assignments (edge search) or extensions (vertex generation)
    /// examined.
    pub nodes: u64,
    /// Assignments rejected for completing a monochromatic target.
    pub prunes: u64,
    pub symmetry_rejections: u64,
    /// Generated graphs discarded as isomorphic to one already kept.
    pub canonical_rejections: u64,
    /// Extensions that survived pruning.
    pub candidates: u64,
    pub work_units: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.nodes += o.nodes;
        self.prunes += o.prunes;
        self.symmetry_rejections += o.symmetry_rejections;
        self.canonical_rejections += o.canonical_rejections;
        self.candidates += o.candidates;
        self.work_units += o.work_units;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    EdgeSearch,
    VertexGeneration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDigest {
    pub engine: Engine,
    pub symmetry: SymmetryMode,
    pub stats: SearchStats,
    /// SHA-256 of every setting that affects the search path; worker count
    /// and budgets excluded.
    pub config_hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Counterexample { coloring: ColoringFile },
    Exhaustion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub host: HostGraph,
    pub red_graph6: String,
    pub blue: BlueTarget,
    pub evidence: Evidence,
    pub digest: SearchDigest,
}

impl Certificate {
    pub fn is_counterexample(&self) -> bool {
        matches!(self.evidence, Evidence::Counterexample { .. })
    }

    pub fn coloring(&self) -> Option<Result<TwoColoring>> {
        match &self.evidence {
            Evidence::Counterexample { coloring } => Some(coloring.clone().into_coloring()),
            Evidence::Exhaustion => None,
        }
    }

    /// Re-checks a counterexample with the naive checkers. Exhaustion
    /// certificates can only be re-derived; see [`Certificate::replay`].
    pub fn verify(&self) -> Result<()> {
        let red = crate::graph6::parse_graph6(&self.red_graph6)?;
        match self.coloring() {
            Some(c) => {
                let c = c?;
                if c.host() != self.host {
                    return Err(invalid("certificate host mismatch"));
                }
                validate_neither(&c, &red, &self.blue)
            }
            None => Ok(()),
        }
    }

    /// Re-runs the search under `cfg` and checks that it reproduces this
    /// certificate exactly.
    pub fn replay(&self, cfg: &SearchConfig) -> Result<bool> {
        let red = crate::graph6::parse_graph6(&self.red_graph6)?;
        let again = arrows(self.host, &red, &self.blue, cfg)?;
        Ok(again.certificate == *self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowsResult {
    pub arrows: bool,
    pub certificate: Certificate,
}

fn resolve_symmetry(cfg: &SearchConfig, red: &Checker) -> Result<SymmetryMode> {
    let mode = match cfg.symmetry {
        SymmetryMode::Auto => match (red, cfg.edge_order) {
            (Checker::Triangle, _) => SymmetryMode::CanonicalAugmentation,
            (_, EdgeOrder::Lexicographic) => SymmetryMode::VertexOrbit,
            (_, EdgeOrder::Colexicographic) => SymmetryMode::None,
        },
        m => m,
    };
    if mode == SymmetryMode::VertexOrbit && cfg.edge_order != EdgeOrder::Lexicographic {
        return Err(invalid("vertex-orbit pruning needs lexicographic edge order"));
    }
    Ok(mode)
}

fn config_hash(host: HostGraph, red6: &str, blue: &BlueTarget, cfg: &SearchConfig, mode: SymmetryMode) -> String {
    let text = format!(
        "ramseylab-search/1|host={}|red={red6}|blue={}|edge-order={:?}|symmetry={mode:?}|prefix={}",
        serde_json::to_string(&host).expect("serializable"),
        blue.describe(),
        cfg.edge_order,
        cfg.prefix_depth,
    );
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn blue_checker(blue: &BlueTarget) -> Result<Checker> {
    match blue {
        BlueTarget::Fan(spec) => Ok(Checker::for_fan(*spec)),
        BlueTarget::Graph { .. } => {
            let h = blue.graph()?;
            if h.order() > BLUE_PATTERN_LIMIT {
                return Err(Error::SizeLimit {
                    order: h.order(),
                    limit: BLUE_PATTERN_LIMIT,
                });
            }
            Checker::for_graph(&h)
        }
    }
}

/// Does every 2-colouring of `host` contain a red `g` or a blue `blue`?
pub fn arrows(host: HostGraph, g: &Graph, blue: &BlueTarget, cfg: &SearchConfig) -> Result<ArrowsResult> {
    host.validate()?;
    if host.order() > cfg.max_host_order {
        return Err(Error::SizeLimit {
            order: host.order(),
            limit: cfg.max_host_order,
        });
    }
    let red_checker = Checker::for_graph(g)?;
    let blue_checker = blue_checker(blue)?;
    let mode = resolve_symmetry(cfg, &red_checker)?;
    let deadline = cfg.time_budget.map(|d| Instant::now() + d);
    let (hit, stats, engine) = if mode == SymmetryMode::CanonicalAugmentation {
        let gen = layered::Layered {
            red: &red_checker,
            blue: Some(&blue_checker),
            workers: cfg.workers,
            budget: cfg.node_budget,
            deadline,
        };
        let (hit, stats) = gen.first_good(host)?;
        (hit, stats, Engine::VertexGeneration)
    } else {
        let search = dfs::EdgeSearch {
            host,
            red: &red_checker,
            blue: &blue_checker,
            edge_order: cfg.edge_order,
            symmetry: mode == SymmetryMode::VertexOrbit,
            prefix_depth: cfg.prefix_depth,
            workers: cfg.workers,
            budget: cfg.node_budget,
            deadline,
        };
        let (hit, stats) = search.run()?;
        (hit, stats, Engine::EdgeSearch)
    };
    let red6 = emit_graph6(g);
    if let Some(c) = &hit {
        debug_assert!(validate_neither(c, g, blue).is_ok());
    }
    let digest = SearchDigest {
        engine,
        symmetry: mode,
        stats,
        config_hash: config_hash(host, &red6, blue, cfg, mode),
    };
    Ok(ArrowsResult {
        arrows: hit.is_none(),
        certificate: Certificate {
            host,
            red_graph6: red6,
            blue: blue.clone(),
            evidence: match hit {
                Some(c) => Evidence::Counterexample { coloring: c.to_file() },
                None => Evidence::Exhaustion,
            },
            digest,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Unresolved {
    /// The arrowing already holds below the bracket.
    BelowBracket { order: usize },
    /// No arrowing up to the top of the bracket.
    AboveBracket { order: usize },
    BudgetExhausted { order: usize, nodes: u64 },
    /// Star-critical scan found no arrowing even at full pendant degree:
    /// the supplied Ramsey number is wrong.
    InconsistentRamseyNumber { r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    Resolved {
        value: usize,
        /// Good colouring one step below `value`, if that host exists.
        lower: Option<Certificate>,
        /// Exhaustion at `value`.
        upper: Certificate,
    },
    Unresolved {
        reason: Unresolved,
    },
}

impl SearchOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SearchOutcome::Resolved { value, .. } => Some(*value),
            SearchOutcome::Unresolved { .. } => None,
        }
    }
}

/// Scans hosts `host(i)` for `i` in `range`; returns the first index that
/// arrows, with the preceding counterexample.
fn scan(
    range: std::ops::RangeInclusive<usize>,
    host: impl Fn(usize) -> Result<HostGraph>,
    g: &Graph,
    blue: &BlueTarget,
    cfg: &SearchConfig,
) -> Result<std::result::Result<(usize, Option<Certificate>, Certificate), (usize, u64)>> {
    let mut lower = None;
    for i in range {
        match arrows(host(i)?, g, blue, cfg) {
            Ok(r) if r.arrows => return Ok(Ok((i, lower, r.certificate))),
            Ok(r) => lower = Some(r.certificate),
            Err(Error::BudgetExhausted { nodes }) => return Ok(Err((i, nodes))),
            Err(e) => return Err(e),
        }
    }
    Ok(Err((usize::MAX, 0)))
}

/// `R(G, H)` searched over `K_lo ..= K_hi`.
pub fn ramsey_number(g: &Graph, blue: &BlueTarget, lo: usize, hi: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if lo > hi {
        return Err(invalid("empty bracket"));
    }
    let start = lo.saturating_sub(1);
    match scan(start..=hi, HostGraph::complete, g, blue, cfg)? {
        Ok((n, _, _)) if n < lo => Ok(SearchOutcome::Unresolved {
            reason: Unresolved::BelowBracket { order: n },
        }),
        Ok((value, lower, upper)) => Ok(SearchOutcome::Resolved { value, lower, upper }),
        Err((usize::MAX, _)) => Ok(SearchOutcome::Unresolved {
            reason: Unresolved::AboveBracket { order: hi },
        }),
        Err((order, nodes)) => Ok(SearchOutcome::Unresolved {
            reason: Unresolved::BudgetExhausted { order, nodes },
        }),
    }
}

/// `r_*(G, H)`: least `k` with `K_{r-1} ⊔ K_{1,k}` arrowing, where `r =
/// R(G, H)`.
pub fn star_critical_number(g: &Graph, blue: &BlueTarget, r: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if r < 1 {
        return Err(invalid("Ramsey number must be positive"));
    }
    let m = r - 1;
    match scan(0..=m, |k| HostGraph::star_book(m, k), g, blue, cfg)? {
        Ok((value, lower, upper)) => Ok(SearchOutcome::Resolved { value, lower, upper }),
        Err((usize::MAX, _)) => Ok(SearchOutcome::Unresolved {
            reason: Unresolved::InconsistentRamseyNumber { r },
        }),
        Err((order, nodes)) => Ok(SearchOutcome::Unresolved {
            reason: Unresolved::BudgetExhausted { order, nodes },
        }),
    }
}

/// Triangle-free graphs on `order` vertices, one canonical form per
/// isomorphism class, sorted.
pub fn triangle_free_graphs(order: usize, workers: usize) -> Result<(Vec<Graph>, SearchStats)> {
    if order > TRIANGLE_FREE_LIMIT {
        return Err(Error::SizeLimit {
            order,
            limit: TRIANGLE_FREE_LIMIT,
        });
    }
    let red = Checker::Triangle;
    layered::Layered {
        red: &red,
        blue: None,
        workers,
        budget: u64::MAX,
        deadline: None,
    }
    .classes(order)
}

/// Red graphs of the good colourings of `K_n` up to isomorphism, sorted.
pub fn good_red_graphs(n: usize, g: &Graph, blue: &BlueTarget, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    if n > cfg.max_host_order {
        return Err(Error::SizeLimit {
            order: n,
            limit: cfg.max_host_order,
        });
    }
    let red = Checker::for_graph(g)?;
    let blue = blue_checker(blue)?;
    let (classes, _) = layered::Layered {
        red: &red,
        blue: Some(&blue),
        workers: cfg.workers,
        budget: cfg.node_budget,
        deadline: cfg.time_budget.map(|d| Instant::now() + d),
    }
    .classes(n)?;
    Ok(classes.into_iter().filter(|c| c.order() == n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions::ramsey_witness_fan;
    use crate::graph::{complete, cycle, FanSpec};

    fn k3() -> (Graph, BlueTarget) {
        (complete(3), BlueTarget::from_graph(&complete(3)))
    }

    fn all_modes() -> [SymmetryMode; 3] {
        [SymmetryMode::None, SymmetryMode::VertexOrbit, SymmetryMode::CanonicalAugmentation]
    }

    #[test]
    fn classical_pair() {
        let (g, h) = k3();
        for mode in all_modes() {
            let cfg = SearchConfig::default().with_symmetry(mode);
            assert!(arrows(HostGraph::Complete { n: 6 }, &g, &h, &cfg).unwrap().arrows);
            let r = arrows(HostGraph::Complete { n: 5 }, &g, &h, &cfg).unwrap();
            assert!(!r.arrows);
            r.certificate.verify().unwrap();
            let c = r.certificate.coloring().unwrap().unwrap();
            assert!(is_isomorphic(&c.red_graph(), &cycle(5).unwrap()));
        }
    }

    #[test]
    fn witness_below_fan_number() {
        let blue = BlueTarget::Fan(FanSpec::new(2, 2).unwrap());
        let r = arrows(HostGraph::Complete { n: 8 }, &complete(3), &blue, &SearchConfig::default()).unwrap();
        assert!(!r.arrows);
        r.certificate.verify().unwrap();
        let w = ramsey_witness_fan(2, 2, 2).unwrap();
        validate_neither(&w, &complete(3), &blue).unwrap();
    }

    #[test]
    fn full_pendant_matches_complete_host() {
        let (g, h) = k3();
        let cfg = SearchConfig::default().with_symmetry(SymmetryMode::VertexOrbit);
        for m in 3..6 {
            let a = arrows(HostGraph::StarBook { m, k: m }, &g, &h, &cfg).unwrap().arrows;
            let b = arrows(HostGraph::Complete { n: m + 1 }, &g, &h, &cfg).unwrap().arrows;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn small_triangle_free_counts() {
        let counts: Vec<usize> = (0..8).map(|n| triangle_free_graphs(n, 1).unwrap().0.len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 7, 14, 38, 107]);
        assert!(matches!(triangle_free_graphs(11, 1), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn budget_is_distinct_from_false() {
        let (g, h) = k3();
        for mode in all_modes() {
            let cfg = SearchConfig::default().with_symmetry(mode).with_budget(10);
            assert!(matches!(
                arrows(HostGraph::Complete { n: 6 }, &g, &h, &cfg),
                Err(Error::BudgetExhausted { .. })
            ));
        }
    }

    #[test]
    fn size_limit() {
        let (g, h) = k3();
        let r = arrows(HostGraph::Complete { n: 14 }, &g, &h, &SearchConfig::default());
        assert!(matches!(r, Err(Error::SizeLimit { order: 14, .. })));
    }

    #[test]
    fn colexicographic_order() {
        let (g, h) = k3();
        let cfg = SearchConfig {
            edge_order: EdgeOrder::Colexicographic,
            symmetry: SymmetryMode::None,
            ..Default::default()
        };
        assert!(arrows(HostGraph::Complete { n: 6 }, &g, &h, &cfg).unwrap().arrows);
        let bad = SearchConfig {
            symmetry: SymmetryMode::VertexOrbit,
            ..cfg
        };
        assert!(arrows(HostGraph::Complete { n: 6 }, &g, &h, &bad).is_err());
    }

    #[test]
    fn digests_ignore_workers_and_replay() {
        let blue = BlueTarget::Fan(FanSpec::new(1, 3).unwrap());
        let g = cycle(4).unwrap();
        let host = HostGraph::Complete { n: 7 };
        let one = arrows(host, &g, &blue, &SearchConfig::default().with_workers(1)).unwrap();
        let many = arrows(host, &g, &blue, &SearchConfig::default().with_workers(4)).unwrap();
        assert_eq!(one, many);
        assert!(one.certificate.replay(&SearchConfig::default().with_workers(3)).unwrap());
    }

    #[test]
    fn bracket_reporting() {
        let (g, h) = k3();
        let cfg = SearchConfig::default();
        let below = ramsey_number(&g, &h, 7, 9, &cfg).unwrap();
        assert_eq!(below, SearchOutcome::Unresolved {
            reason: Unresolved::BelowBracket { order: 6 }
        });
        let above = ramsey_number(&g, &h, 2, 5, &cfg).unwrap();
        assert_eq!(above, SearchOutcome::Unresolved {
            reason: Unresolved::AboveBracket { order: 5 }
        });
        let bad = star_critical_number(&g, &h, 5, &cfg).unwrap();
        assert_eq!(bad, SearchOutcome::Unresolved {
            reason: Unresolved::InconsistentRamseyNumber { r: 5 }
        });
    }
}
