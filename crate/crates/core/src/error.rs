use num_bigint::BigUint;
use thiserror::Error;

use crate::forest::NodeId;

/// Errors raised while reading forests, family specs, labelings or coefficient lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },
    #[error("vertex {vertex}: parent index {parent} out of range 0..={n}")]
    OutOfRange { vertex: usize, parent: usize, n: usize },
    #[error("cycle detected through vertex {vertex}")]
    Cycle { vertex: usize },
    #[error("unbalanced parentheses at byte {position}")]
    Unbalanced { position: usize },
    #[error("unexpected character {ch:?} at byte {position}")]
    UnexpectedChar { position: usize, ch: char },
    #[error("invalid family spec {spec:?}: {reason}")]
    Family { spec: String, reason: String },
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown vertex {0}")]
    UnknownVertex(NodeId),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what}: size {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("expected a single tree, found {components} components")]
    NotATree { components: usize },
    #[error("memo store exhausted at {entries} entries")]
    MemoExhausted { entries: usize },
    #[error("coefficients sum to {actual}, expected {expected}")]
    Normalization { expected: BigUint, actual: BigUint },
    #[error("labeling is not a bijection: {0}")]
    NonBijective(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for caps and resource limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::MemoExhausted { .. } => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
