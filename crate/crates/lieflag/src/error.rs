use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no simple root system of type {family}{rank}: {reason}")]
    Inadmissible { family: char, rank: usize, reason: &'static str },
    #[error("unknown Lie type {0:?}")]
    BadTypeName(String),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {weight:?} has length {got}, expected {expected}")]
    WrongLength { weight: Vec<i64>, got: usize, expected: usize },
    #[error("{what} exceeds the configured cap of {cap}")]
    ResourceCap { what: &'static str, cap: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("trilinear form is not symmetric at {0:?}")]
    NotSymmetric(Vec<usize>),
    #[error("multiplication is not compatible: {0}")]
    Incompatible(String),
    #[error("unsupported ambient: {0}")]
    UnsupportedAmbient(String),
    #[error("invalid node {node} for rank {rank}")]
    BadNode { node: usize, rank: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
