use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph of order {order} exceeds the limit of {limit} vertices")]
    SizeLimit { order: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6/sparse6 parse error: {0}")]
    Parse(String),

    #[error("graph is not edge-critical")]
    NotEdgeCritical,

    #[error("premise violated: {0}")]
    Premise(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
