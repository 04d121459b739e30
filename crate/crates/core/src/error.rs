//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by estimators, resamplers and the experiment harness.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A rank-based estimator was asked to handle a column with ties.
    #[error("component sample {column} contains ties; this estimator is only defined for tie-free data")]
    TiesPresent { column: usize },

    /// An evaluation and its reference were computed on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("empty grid")]
    EmptyGrid,

    #[error("empty input")]
    EmptyInput,

    /// A requested point is not one of the replicate grid points.
    #[error("point {0:?} is not on the replicate grid")]
    PointNotOnGrid(Vec<f64>),

    #[error("expected dimension {expected}, got {got}")]
    DimensionError { expected: usize, got: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("unsupported copula family: {0}")]
    UnsupportedFamily(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Quadrature error estimate exceeded the configured tolerance.
    #[error("quadrature did not converge: estimated error {estimated:.3e} exceeds tolerance {tolerance:.3e}")]
    QuadratureNonconvergence { estimated: f64, tolerance: f64 },

    /// Structurally malformed CSV input. Row and column are 1-based.
    #[error("CSV parse error at row {row}, column {column}: {message}")]
    ParseError {
        row: usize,
        column: usize,
        message: String,
    },

    /// A CSV cell that should hold a number does not. Row and column are 1-based.
    #[error("non-numeric cell {content:?} at row {row}, column {column}")]
    NonNumericCell {
        row: usize,
        column: usize,
        content: String,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
