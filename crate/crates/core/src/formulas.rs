//! Closed-form bounds and predicted values, each tagged with its source
//! and with how far it can be trusted.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    Exact,
    LowerBound,
    UpperBound,
    /// Holds only beyond an unquantified threshold (or under unstated side
    /// conditions); never to be asserted against finite computations.
    AsymptoticOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    /// Numeric value; `None` when only a symbolic form is known.
    pub value: Option<u64>,
    /// Symbolic form for results with an `o(1)` term.
    pub symbolic: Option<String>,
    pub source: String,
    pub validity: Validity,
    pub side_condition: Option<String>,
}

impl FormulaResult {
    fn new(value: u64, source: &str, validity: Validity) -> Self {
        FormulaResult {
            value: Some(value),
            symbolic: None,
            source: source.to_string(),
            validity,
            side_condition: None,
        }
    }

    fn when(mut self, cond: &str) -> Self {
        self.side_condition = Some(cond.to_string());
        self
    }

    /// Value, panicking for symbolic-only results.
    pub fn expect_value(&self) -> u64 {
        self.value.expect("numeric formula result")
    }
}

const LARGE_N: &str = "n sufficiently large";

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

/// Burr: `R(G,H) >= (χ(G)-1)(|V(H)|-1) + s(G)` for connected `H` with
/// `|V(H)| >= s(G)`.
pub fn burr_lower(chi: u64, s: u64, h: u64) -> Result<FormulaResult> {
    need(chi >= 1, "chi must be at least 1")?;
    need(s >= 1 && h >= s, "need h >= s >= 1")?;
    Ok(FormulaResult::new((chi - 1) * (h - 1) + s, "Burr", Validity::LowerBound)
        .when("H connected, |V(H)| >= s(G)"))
}

/// Erdős: `R(G, nH) <= (n-1)|V(H)| + R(G,H)`.
pub fn erdos_upper(r_gh: u64, h: u64, n: u64) -> Result<FormulaResult> {
    need(n >= 1, "n must be at least 1")?;
    Ok(FormulaResult::new((n - 1) * h + r_gh, "Erdos", Validity::UpperBound).when("bound on R(G, nH)"))
}

/// Hao–Lin lower bound on the star-critical Ramsey number:
/// `(χ-2)(h-1) + min(h, δ(H)+τ(G)-1)`, plus `s+1` when `H` has no cut
/// vertex or `δ(H) = 1`.
pub fn hao_lin_lower(
    chi: u64,
    s: u64,
    tau: u64,
    h: u64,
    delta: u64,
    no_cut_or_delta1: bool,
) -> Result<FormulaResult> {
    need(chi >= 2, "chi must be at least 2")?;
    need(s >= 1 && h > s, "need h >= s + 1")?;
    need(delta + tau >= 1, "delta + tau must be positive")?;
    let mut v = (chi - 2) * (h - 1) + h.min(delta + tau - 1);
    let mut r = FormulaResult::new(0, "Hao-Lin", Validity::LowerBound).when("H connected of order h >= s(G)+1");
    if no_cut_or_delta1 {
        v += s + 1;
        r.side_condition = Some("H connected, no cut vertex or minimum degree 1".into());
    }
    r.value = Some(v);
    Ok(r)
}

fn fan_params(k: u64, t: u64, n: u64) -> Result<()> {
    need(k >= 2 && t >= 2 && n >= 1, "need k >= 2, t >= 2, n >= 1")
}

/// Predicted `R(G, K_1 + nK_t) = knt + 1` for edge-critical `G` with
/// `χ(G) = k+1`.
pub fn predict_r_fan(k: u64, t: u64, n: u64) -> Result<FormulaResult> {
    fan_params(k, t, n)?;
    Ok(FormulaResult::new(k * n * t + 1, "edge-critical-vs-fan", Validity::AsymptoticOnly).when(LARGE_N))
}

/// Predicted `r_*(G, K_1 + nK_t) = (k-1)nt + t`.
pub fn predict_rstar_fan(k: u64, t: u64, n: u64) -> Result<FormulaResult> {
    fan_params(k, t, n)?;
    Ok(FormulaResult::new((k - 1) * n * t + t, "edge-critical-vs-fan", Validity::AsymptoticOnly).when(LARGE_N))
}

/// Parameters for [`known_result`]; each tag reads the fields it needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownParams {
    pub k: Option<u64>,
    pub t: Option<u64>,
    pub n: Option<u64>,
    /// Order of `H` for the `K_1 + nH` families.
    pub h: Option<u64>,
    /// Number of disjoint cliques in `rK_{k+1}`.
    pub r: Option<u64>,
    /// Minimum degree of `H`.
    pub delta: Option<u64>,
}

fn get(p: Option<u64>, name: &str, min: u64) -> Result<u64> {
    match p {
        Some(v) if v >= min => Ok(v),
        Some(v) => Err(invalid(format!("{name} = {v} is below {min}"))),
        None => Err(invalid(format!("missing parameter {name}"))),
    }
}

/// Published values for generalized fans and related families, keyed by
/// their letter in the standard list:
///
/// * `a` `R(K_k, T_n) = (k-1)(n-1)+1`
/// * `b` `R(K_{k+1}, K_1+nK_t) = knt+1`
/// * `c` `R(rK_{k+1}, K_1+nH) = knh+r`
/// * `d` `R(K_{k+1}, K_t+nK_1) = k(n+t-1)+1`
/// * `e` `R(C_{2k+1}, K_1+nK_t) = 2nt+1`
/// * `f` `r_*(K_{k+1}, K_1+nK_t) = (k-1)tn+t`
/// * `g` `r_*(rK_{k+1}, K_1+nH) = (k-1)nh+δ(H)`
/// * `h` `r_*(K_{k+1}, K_t+nK_1) = (k-1+o(1))n` (symbolic only)
/// * `i` `r_*(C_{2m+1}, K_1+nK_t) = nt+t`
pub fn known_result(tag: char, p: &KnownParams) -> Result<FormulaResult> {
    use Validity::*;
    let r = match tag.to_ascii_lowercase() {
        'a' => {
            let k = get(p.k, "k", 1)?;
            let n = get(p.n, "n", 1)?;
            FormulaResult::new((k - 1) * (n - 1) + 1, "Chvatal", Exact).when("any tree T_n")
        }
        'b' => {
            let (k, t, n) = (get(p.k, "k", 2)?, get(p.t, "t", 2)?, get(p.n, "n", 1)?);
            FormulaResult::new(k * n * t + 1, "Li-Rousseau", AsymptoticOnly).when(LARGE_N)
        }
        'c' => {
            let (k, n, h, r) = (get(p.k, "k", 2)?, get(p.n, "n", 1)?, get(p.h, "h", 1)?, get(p.r, "r", 1)?);
            FormulaResult::new(k * n * h + r, "Hamm-Hazelton-Thompson", AsymptoticOnly)
                .when("under restrictions on the parameters")
        }
        'd' => {
            let (k, t, n) = (get(p.k, "k", 2)?, get(p.t, "t", 3)?, get(p.n, "n", 1)?);
            FormulaResult::new(k * (n + t - 1) + 1, "Nikiforov-Rousseau", AsymptoticOnly).when(LARGE_N)
        }
        'e' => {
            let (t, n) = (get(p.t, "t", 1)?, get(p.n, "n", 1)?);
            FormulaResult::new(2 * n * t + 1, "Li-Liu", AsymptoticOnly).when(LARGE_N)
        }
        'f' => {
            let (k, t, n) = (get(p.k, "k", 2)?, get(p.t, "t", 2)?, get(p.n, "n", 1)?);
            FormulaResult::new((k - 1) * t * n + t, "Hao-Lin", AsymptoticOnly).when(LARGE_N)
        }
        'g' => {
            let (k, n, h) = (get(p.k, "k", 2)?, get(p.n, "n", 1)?, get(p.h, "h", 1)?);
            let delta = get(p.delta, "delta", 0)?;
            get(p.r, "r", 1)?;
            FormulaResult::new((k - 1) * n * h + delta, "Hamm-Hazelton-Thompson", AsymptoticOnly)
                .when("under restrictions on the parameters")
        }
        'h' => {
            get(p.k, "k", 2)?;
            get(p.t, "t", 2)?;
            FormulaResult {
                value: None,
                symbolic: Some("(k-1+o(1))n".into()),
                source: "Hao-Lin".into(),
                validity: AsymptoticOnly,
                side_condition: Some("n -> infinity".into()),
            }
        }
        'i' => {
            let (t, n) = (get(p.t, "t", 1)?, get(p.n, "n", 1)?);
            FormulaResult::new(n * t + t, "Li-Li-Wang", AsymptoticOnly).when(LARGE_N)
        }
        other => return Err(invalid(format!("unknown result tag {other:?}"))),
    };
    Ok(r)
}

/// Classical two-colour clique Ramsey numbers `R(K_a, K_b)` that are known
/// exactly.
pub fn classical_ramsey(a: u64, b: u64) -> Option<u64> {
    let (a, b) = (a.min(b), a.max(b));
    match (a, b) {
        (0, _) => Some(0),
        (1, _) => Some(1),
        (2, b) => Some(b),
        (3, 3) => Some(6),
        (3, 4) => Some(9),
        (3, 5) => Some(14),
        (3, 6) => Some(18),
        (3, 7) => Some(23),
        (3, 8) => Some(28),
        (3, 9) => Some(36),
        (4, 4) => Some(18),
        (4, 5) => Some(25),
        _ => None,
    }
}

/// Upper bound on `R(K_{k+1}, K_1 + nK_t)` from the degree recursion
/// `R(K_a, K_1+H) <= R(K_{a-1}, K_1+H) + R(K_a, H)` with
/// `R(K_a, nK_t) <= (n-1)t + R(K_a, K_t)` and `R(K_2, K_1+nK_t) = nt+1`.
pub fn fan_upper_complete(k: u64, t: u64, n: u64) -> Result<FormulaResult> {
    need(k >= 1 && t >= 1 && n >= 1, "need k, t, n >= 1")?;
    let mut bound = n * t + 1;
    for a in 3..=k + 1 {
        let r_at = classical_ramsey(a, t).ok_or_else(|| invalid(format!("R(K_{a},K_{t}) not tabulated")))?;
        bound += erdos_upper(r_at, t, n)?.expect_value();
    }
    Ok(FormulaResult::new(bound, "Erdos+degree-recursion", Validity::UpperBound))
}
