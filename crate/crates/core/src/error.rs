use thiserror::Error;

/// Errors produced by the matrix kernels and the analysis procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be ≤ 3 (got {0})")]
    InvalidDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("generator gave up after {0} rejection rounds")]
    GenerationFailed(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
