//! Two-colour Ramsey and star-critical Ramsey numbers for a red pattern against
//! a blue fan `K_1 + n K_t`: chromatic invariants, explicit
//! lower-bound colourings, arrowing checks, closed-form predictions, an
//! exhaustive certificate-producing search engine and partition-based
//! structure diagnostics.

pub mod arrowing;
pub mod bits;
pub mod canon;
pub mod constructions;
pub mod embed;
pub mod formulas;
mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;
pub mod stability;

pub use error::{Error, Result};
pub use graph::{FanSpec, Graph};
