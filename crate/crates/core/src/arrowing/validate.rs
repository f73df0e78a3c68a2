//! Independent re-validation of witnesses and of `Neither` verdicts.
//!
//! Everything here reads colours edge by edge through
//! [`TwoColoring::color`] and uses plain nested enumeration; none of the
//! bit-set search code is reused.

use super::{BlueTarget, Color, TwoColoring, Witness};
use crate::error::{Error, Result};
use crate::graph::{FanSpec, Graph};

fn fail(msg: impl Into<String>) -> Error {
    Error::Premise(msg.into())
}

fn check_map(c: &TwoColoring, pattern: &Graph, map: &[usize], color: Color) -> Result<()> {
    if map.len() != pattern.order() {
        return Err(fail("embedding has the wrong length"));
    }
    for (i, &a) in map.iter().enumerate() {
        if a >= c.order() {
            return Err(fail(format!("image {a} out of range")));
        }
        if map[..i].contains(&a) {
            return Err(fail("embedding is not injective"));
        }
    }
    for u in 0..pattern.order() {
        for v in u + 1..pattern.order() {
            if pattern.has_edge(u, v) && c.color(map[u], map[v]) != Some(color) {
                return Err(fail(format!(
                    "pattern edge ({u},{v}) maps to ({},{}) which is not {color:?}",
                    map[u], map[v]
                )));
            }
        }
    }
    Ok(())
}

fn check_fan(c: &TwoColoring, spec: FanSpec, center: usize, blades: &[Vec<usize>]) -> Result<()> {
    if blades.len() != spec.n || blades.iter().any(|b| b.len() != spec.t) {
        return Err(fail("blade count or size mismatch"));
    }
    let mut all: Vec<usize> = blades.iter().flatten().copied().collect();
    all.push(center);
    let mut sorted = all.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != all.len() {
        return Err(fail("fan vertices are not distinct"));
    }
    for blade in blades {
        for (i, &a) in blade.iter().enumerate() {
            if c.color(center, a) != Some(Color::Blue) {
                return Err(fail(format!("spoke ({center},{a}) is not blue")));
            }
            for &b in &blade[i + 1..] {
                if c.color(a, b) != Some(Color::Blue) {
                    return Err(fail(format!("blade edge ({a},{b}) is not blue")));
                }
            }
        }
    }
    Ok(())
}

/// Checks a positive witness against the colouring. `Neither` is rejected
/// here; use [`validate_neither`] for negative verdicts.
pub fn validate_witness(c: &TwoColoring, w: &Witness, red: &Graph, blue: &BlueTarget) -> Result<()> {
    match w {
        Witness::RedEmbedding { map } => check_map(c, red, map, Color::Red),
        Witness::BlueEmbedding { map } => check_map(c, &blue.graph()?, map, Color::Blue),
        Witness::BlueFan { center, blades } => match blue {
            BlueTarget::Fan(spec) => check_fan(c, *spec, *center, blades),
            BlueTarget::Graph { .. } => Err(fail("fan witness for a non-fan target")),
        },
        Witness::Neither => Err(fail("Neither is not a positive witness")),
    }
}

/// Naive monochromatic-copy test: assigns pattern vertices in index order
/// and checks edges back to already placed vertices.
pub fn naive_contains(c: &TwoColoring, pattern: &Graph, color: Color) -> bool {
    fn go(c: &TwoColoring, p: &Graph, color: Color, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == p.order() {
            return true;
        }
        for a in 0..c.order() {
            if map.contains(&a) {
                continue;
            }
            if (0..i).all(|j| !p.has_edge(i, j) || c.color(map[j], a) == Some(color)) {
                map.push(a);
                if go(c, p, color, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.order() <= c.order() && go(c, pattern, color, &mut Vec::new())
}

/// Confirms that `c` has neither a red `red` nor a blue `blue`.
pub fn validate_neither(c: &TwoColoring, red: &Graph, blue: &BlueTarget) -> Result<()> {
    if naive_contains(c, red, Color::Red) {
        return Err(fail("colouring contains the red pattern"));
    }
    if naive_contains(c, &blue.graph()?, Color::Blue) {
        return Err(fail("colouring contains the blue pattern"));
    }
    Ok(())
}
