use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range 1..={bound}")]
    OutOfBounds { index: usize, bound: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("value out of domain: {0}")]
    Domain(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("n = {n} exceeds the size guard of {limit}; raise the limit explicitly to continue")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid peakon state: {0}")]
    InvalidState(String),

    #[error("parse error: {0}")]
    Parse(String),
}
