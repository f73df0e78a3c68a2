//! Two-colourings of host graphs and the containment checks that define
//! arrowing: red `G`, blue `K_1 + n K_t`, blue `H`.

pub mod fan;
pub mod validate;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask};
use crate::embed::{find_embedding, Pattern};
use crate::error::{invalid, Error, Result};
use crate::graph::{FanSpec, Graph, MAX_ORDER};

/// Largest pattern accepted by the generic blue-subgraph check.
pub const BLUE_PATTERN_LIMIT: usize = 12;

/// The graph whose edges get coloured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HostGraph {
    /// `K_n`.
    Complete { n: usize },
    /// `K_m ⊔ K_{1,k}`: vertices `0..m` form `K_m`; the pendant vertex `m`
    /// is adjacent to exactly `0..k`.
    StarBook { m: usize, k: usize },
}

impl HostGraph {
    pub fn complete(n: usize) -> Result<Self> {
        let h = HostGraph::Complete { n };
        h.validate()?;
        Ok(h)
    }

    pub fn star_book(m: usize, k: usize) -> Result<Self> {
        let h = HostGraph::StarBook { m, k };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        if self.order() > MAX_ORDER {
            return Err(Error::SizeLimit {
                order: self.order(),
                limit: MAX_ORDER,
            });
        }
        if let HostGraph::StarBook { m, k } = *self {
            if k > m {
                return Err(invalid(format!("pendant degree {k} exceeds clique order {m}")));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        match *self {
            HostGraph::Complete { n } => n,
            HostGraph::StarBook { m, .. } => m + 1,
        }
    }

    /// Order of the complete part.
    pub fn clique_order(&self) -> usize {
        match *self {
            HostGraph::Complete { n } => n,
            HostGraph::StarBook { m, .. } => m,
        }
    }

    pub fn pendant(&self) -> Option<usize> {
        match *self {
            HostGraph::Complete { .. } => None,
            HostGraph::StarBook { m, .. } => Some(m),
        }
    }

    /// Adjacency rows of the host.
    pub fn rows(&self) -> Vec<u64> {
        match *self {
            HostGraph::Complete { n } => (0..n).map(|v| low_mask(n) & !bit(v)).collect(),
            HostGraph::StarBook { m, k } => {
                let mut rows: Vec<u64> = (0..m).map(|v| low_mask(m) & !bit(v)).collect();
                for r in rows.iter_mut().take(k) {
                    *r |= bit(m);
                }
                rows.push(low_mask(k));
                rows
            }
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_rows(self.rows()).expect("host rows are valid")
    }

    /// Host edges in the normative order: `(i, j)`, `i < j`, lexicographic
    /// over the complete part, then pendant edges `(i, m)` for `i < k`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.clique_order();
        let mut out: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        if let HostGraph::StarBook { m, k } = *self {
            out.extend((0..k).map(|i| (i, m)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let m = self.clique_order();
        m * m.saturating_sub(1) / 2
            + match *self {
                HostGraph::Complete { .. } => 0,
                HostGraph::StarBook { k, .. } => k,
            }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.order() && v < self.order() && self.rows()[u] & bit(v) != 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// A total red/blue assignment on the edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    host: HostGraph,
    red: Vec<u64>,
    blue: Vec<u64>,
}

impl TwoColoring {
    /// Colours every host edge with `f(u, v)` (`u < v`).
    pub fn from_fn(host: HostGraph, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        host.validate()?;
        let n = host.order();
        let mut red = vec![0u64; n];
        let mut blue = vec![0u64; n];
        for (u, v) in host.edges() {
            let rows = match f(u, v) {
                Color::Red => &mut red,
                Color::Blue => &mut blue,
            };
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(TwoColoring { host, red, blue })
    }

    /// Red edges are those of `red`; every other host edge is blue.
    pub fn from_red_graph(host: HostGraph, red: &Graph) -> Result<Self> {
        if red.order() != host.order() {
            return Err(invalid("red graph order differs from host order"));
        }
        let rows = host.rows();
        if (0..red.order()).any(|v| red.neighbors(v) & !rows[v] != 0) {
            return Err(invalid("red graph has a non-host edge"));
        }
        Self::from_fn(host, |u, v| if red.has_edge(u, v) { Color::Red } else { Color::Blue })
    }

    /// Builds from raw rows; used by the search engine.
    pub(crate) fn from_rows_unchecked(host: HostGraph, red: Vec<u64>, blue: Vec<u64>) -> Self {
        debug_assert!(host.edges().iter().all(|&(u, v)| (red[u] ^ blue[u]) & bit(v) != 0));
        TwoColoring { host, red, blue }
    }

    pub fn host(&self) -> HostGraph {
        self.host
    }

    pub fn order(&self) -> usize {
        self.host.order()
    }

    /// Colour of `uv`, or `None` for a non-edge.
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if u >= self.order() || v >= self.order() {
            return None;
        }
        if self.red[u] & bit(v) != 0 {
            Some(Color::Red)
        } else if self.blue[u] & bit(v) != 0 {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn red_rows(&self) -> &[u64] {
        &self.red
    }

    pub fn blue_rows(&self) -> &[u64] {
        &self.blue
    }

    pub fn rows(&self, color: Color) -> &[u64] {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn red_graph(&self) -> Graph {
        Graph::from_rows(self.red.clone()).expect("valid rows")
    }

    pub fn blue_graph(&self) -> Graph {
        Graph::from_rows(self.blue.clone()).expect("valid rows")
    }

    /// Recolours the host edge `uv`.
    pub fn set(&mut self, u: usize, v: usize, color: Color) -> Result<()> {
        if !self.host.has_edge(u, v) {
            return Err(invalid(format!("({u},{v}) is not a host edge")));
        }
        let (add, del) = match color {
            Color::Red => (&mut self.red, &mut self.blue),
            Color::Blue => (&mut self.blue, &mut self.red),
        };
        add[u] |= bit(v);
        add[v] |= bit(u);
        del[u] &= !bit(v);
        del[v] &= !bit(u);
        Ok(())
    }

    /// Colours along the normative edge order as a string of `R`/`B`.
    pub fn color_string(&self) -> String {
        self.host
            .edges()
            .iter()
            .map(|&(u, v)| self.color(u, v).expect("host edge").as_char())
            .collect()
    }

    pub fn from_color_string(host: HostGraph, colors: &str) -> Result<Self> {
        let edges = host.edges();
        let chars: Vec<char> = colors.chars().collect();
        if chars.len() != edges.len() {
            return Err(invalid(format!(
                "colour string has {} symbols, host has {} edges",
                chars.len(),
                edges.len()
            )));
        }
        let mut it = chars.into_iter();
        let mut bad = None;
        let c = Self::from_fn(host, |_, _| match it.next() {
            Some('R') => Color::Red,
            Some('B') => Color::Blue,
            other => {
                bad = other;
                Color::Blue
            }
        })?;
        match bad {
            Some(ch) => Err(invalid(format!("unexpected colour symbol {ch:?}"))),
            None => Ok(c),
        }
    }

    /// The colouring restricted to the complete part of a star-book host
    /// (identity on complete hosts).
    pub fn restrict_to_clique(&self) -> TwoColoring {
        let m = self.host.clique_order();
        let mask = low_mask(m);
        TwoColoring {
            host: HostGraph::Complete { n: m },
            red: self.red[..m].iter().map(|r| r & mask).collect(),
            blue: self.blue[..m].iter().map(|r| r & mask).collect(),
        }
    }

    pub fn to_file(&self) -> ColoringFile {
        ColoringFile {
            host: self.host,
            colors: self.color_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: ColoringFile = serde_json::from_str(text).map_err(|e| invalid(format!("coloring JSON: {e}")))?;
        f.into_coloring()
    }
}

/// On-disk form of a colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub host: HostGraph,
    pub colors: String,
}

impl ColoringFile {
    pub fn into_coloring(self) -> Result<TwoColoring> {
        TwoColoring::from_color_string(self.host, &self.colors)
    }
}

/// Outcome of a containment check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `map[pattern vertex] = host vertex`, all edges red.
    RedEmbedding { map: Vec<usize> },
    /// Blue fan with the given centre and blades.
    BlueFan { center: usize, blades: Vec<Vec<usize>> },
    /// `map[pattern vertex] = host vertex`, all edges blue.
    BlueEmbedding { map: Vec<usize> },
    Neither,
}

impl Witness {
    pub fn is_neither(&self) -> bool {
        matches!(self, Witness::Neither)
    }
}

/// The blue target: a generalized fan (specialized detector) or any graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlueTarget {
    Fan(FanSpec),
    Graph { graph6: String },
}

impl BlueTarget {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            BlueTarget::Fan(spec) => Ok(crate::graph::fan(*spec)),
            BlueTarget::Graph { graph6 } => crate::graph6::parse_graph6(graph6),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        BlueTarget::Graph {
            graph6: crate::graph6::emit_graph6(g),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            BlueTarget::Fan(s) => format!("fan(n={},t={})", s.n, s.t),
            BlueTarget::Graph { graph6 } => format!("graph6:{graph6}"),
        }
    }
}

/// Least red embedding of `g`, or `Neither`.
pub fn contains_red(c: &TwoColoring, g: &Graph) -> Witness {
    if g.order() > c.order() {
        return Witness::Neither;
    }
    match find_embedding(&c.red, &Pattern::new(g), &[]) {
        Some(map) => Witness::RedEmbedding { map },
        None => Witness::Neither,
    }
}

/// Blue `K_1 + n K_t`, least centre first.
pub fn contains_blue_fan(c: &TwoColoring, spec: FanSpec) -> Witness {
    let centers = low_mask(c.order());
    match fan::find_fan(&c.blue, spec, centers) {
        Some((center, blades)) => Witness::BlueFan { center, blades },
        None => Witness::Neither,
    }
}

/// Generic blue subgraph check for patterns of at most
/// [`BLUE_PATTERN_LIMIT`] vertices.
pub fn contains_blue_subgraph(c: &TwoColoring, h: &Graph) -> Result<Witness> {
    if h.order() > BLUE_PATTERN_LIMIT {
        return Err(Error::SizeLimit {
            order: h.order(),
            limit: BLUE_PATTERN_LIMIT,
        });
    }
    if h.order() > c.order() {
        return Ok(Witness::Neither);
    }
    Ok(match find_embedding(&c.blue, &Pattern::new(h), &[]) {
        Some(map) => Witness::BlueEmbedding { map },
        None => Witness::Neither,
    })
}

/// Blue check against either kind of target.
pub fn contains_blue(c: &TwoColoring, target: &BlueTarget) -> Result<Witness> {
    match target {
        BlueTarget::Fan(spec) => Ok(contains_blue_fan(c, *spec)),
        BlueTarget::Graph { .. } => {
            let h = target.graph()?;
            if h.order() > c.order() {
                return Ok(Witness::Neither);
            }
            Ok(match find_embedding(&c.blue, &Pattern::new(&h), &[]) {
                Some(map) => Witness::BlueEmbedding { map },
                None => Witness::Neither,
            })
        }
    }
}

/// Red `G` first, then the blue target; `Neither` if both are absent.
pub fn check_pair(c: &TwoColoring, g: &Graph, target: &BlueTarget) -> Result<Witness> {
    let red = contains_red(c, g);
    if !red.is_neither() {
        return Ok(red);
    }
    contains_blue(c, target)
}

/// Per-vertex blue degree audit against `d_B(v) <= (n-1)t + R(G,K_t) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBoundReport {
    pub bound: usize,
    pub max_blue_degree: usize,
    /// Vertices whose blue degree exceeds the bound.
    pub violations: Vec<usize>,
}

impl DegreeBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the blue-degree bound on a colouring that contains neither a red
/// `g` nor a blue fan. `r_g_kt` is `R(G, K_t)`.
pub fn blue_degree_bound_check(
    c: &TwoColoring,
    g: &Graph,
    spec: FanSpec,
    r_g_kt: usize,
) -> Result<DegreeBoundReport> {
    if !contains_red(c, g).is_neither() {
        return Err(Error::Premise("colouring contains a red G".into()));
    }
    if !contains_blue_fan(c, spec).is_neither() {
        return Err(Error::Premise("colouring contains a blue fan".into()));
    }
    if r_g_kt == 0 {
        return Err(invalid("R(G,K_t) must be positive"));
    }
    let bound = (spec.n - 1) * spec.t + r_g_kt - 1;
    let degrees: Vec<usize> = c.blue.iter().map(|r| r.count_ones() as usize).collect();
    Ok(DegreeBoundReport {
        bound,
        max_blue_degree: degrees.iter().copied().max().unwrap_or(0),
        violations: (0..degrees.len()).filter(|&v| degrees[v] > bound).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, fan as fan_graph};

    fn all(host: HostGraph, color: Color) -> TwoColoring {
        TwoColoring::from_fn(host, |_, _| color).unwrap()
    }

    fn pentagon() -> TwoColoring {
        TwoColoring::from_red_graph(HostGraph::Complete { n: 5 }, &cycle(5).unwrap()).unwrap()
    }

    fn burr_k8() -> TwoColoring {
        // Red K_{4,4}, blue 2K_4.
        TwoColoring::from_fn(HostGraph::Complete { n: 8 }, |u, v| {
            if (u < 4) == (v < 4) {
                Color::Blue
            } else {
                Color::Red
            }
        })
        .unwrap()
    }

    #[test]
    fn host_shapes() {
        let h = HostGraph::star_book(5, 3).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.edge_count(), 13);
        let e = h.edges();
        assert_eq!(e.len(), 13);
        assert_eq!(&e[10..], &[(0, 5), (1, 5), (2, 5)]);
        assert!(h.has_edge(2, 5) && !h.has_edge(3, 5));
        assert_eq!(h.graph().edge_count(), 13);
        assert!(HostGraph::star_book(3, 4).is_err());
        assert_eq!(HostGraph::Complete { n: 6 }.graph(), complete(6));
    }

    #[test]
    fn red_examples() {
        let c = all(HostGraph::Complete { n: 5 }, Color::Red);
        assert_eq!(contains_red(&c, &complete(3)), Witness::RedEmbedding { map: vec![0, 1, 2] });
        assert!(contains_red(&burr_k8(), &complete(3)).is_neither());
        assert!(contains_red(&pentagon(), &complete(3)).is_neither());
    }

    #[test]
    fn blue_fan_examples() {
        for (n, t) in [(1, 2), (2, 2), (3, 3), (4, 3), (2, 6), (6, 2)] {
            let spec = FanSpec::new(n, t).unwrap();
            let c = all(HostGraph::Complete { n: n * t + 1 }, Color::Blue);
            assert!(matches!(contains_blue_fan(&c, spec), Witness::BlueFan { center: 0, .. }));
            let c = all(HostGraph::Complete { n: n * t }, Color::Blue);
            assert!(contains_blue_fan(&c, spec).is_neither());
        }
        assert!(contains_blue_fan(&burr_k8(), FanSpec::new(2, 2).unwrap()).is_neither());
    }

    #[test]
    fn blue_subgraph_examples() {
        let c = all(HostGraph::Complete { n: 6 }, Color::Blue);
        let f = fan_graph(FanSpec::new(2, 2).unwrap());
        assert!(matches!(contains_blue_subgraph(&c, &f).unwrap(), Witness::BlueEmbedding { .. }));
        assert!(contains_blue_subgraph(&pentagon(), &complete(3)).unwrap().is_neither());
        assert!(contains_blue_subgraph(&c, &complete(13)).is_err());
    }

    #[test]
    fn degree_bound() {
        let r = blue_degree_bound_check(&burr_k8(), &complete(3), FanSpec::new(2, 2).unwrap(), 3).unwrap();
        assert_eq!((r.bound, r.max_blue_degree), (4, 3));
        assert!(r.holds());
        // All red K_5 contains a red triangle: premise fails.
        let red5 = all(HostGraph::Complete { n: 5 }, Color::Red);
        assert!(blue_degree_bound_check(&red5, &complete(3), FanSpec::new(2, 2).unwrap(), 3).is_err());
        // All red K_N with a pattern too large to appear.
        let r = blue_degree_bound_check(&red5, &complete(6), FanSpec::new(2, 2).unwrap(), 6).unwrap();
        assert_eq!(r.max_blue_degree, 0);
    }

    #[test]
    fn color_string_round_trip() {
        let c = burr_k8();
        let s = c.color_string();
        assert_eq!(s.len(), 28);
        assert_eq!(&s[..7], "BBBRRRR");
        let back = TwoColoring::from_color_string(c.host(), &s).unwrap();
        assert_eq!(back, c);
        let json = c.to_json();
        assert!(json.contains("\"kind\":\"complete\""));
        assert_eq!(TwoColoring::from_json(&json).unwrap(), c);
        assert!(TwoColoring::from_color_string(c.host(), "RB").is_err());
        assert!(TwoColoring::from_color_string(HostGraph::Complete { n: 2 }, "X").is_err());
    }

    #[test]
    fn restrict() {
        let host = HostGraph::star_book(4, 2).unwrap();
        let c = all(host, Color::Red);
        let r = c.restrict_to_clique();
        assert_eq!(r.host(), HostGraph::Complete { n: 4 });
        assert_eq!(r.red_graph(), complete(4));
    }
}
