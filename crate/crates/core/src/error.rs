use thiserror::Error;

/// Errors raised by the numerical kernels and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },
    #[error("matrix is not positive definite (pivot {pivot} fell below tolerance)")]
    NotPositiveDefinite { pivot: usize },
    #[error("points are not affinely independent")]
    NotAffinelyIndependent,
    #[error("expected vectors in R^3, found dimension {0}")]
    NotThreeDimensional(usize),
    #[error("no intersection (joint residual {residual:e})")]
    NoIntersection { residual: f64 },
    #[error("degenerate step at iteration {iteration}: circumcenter is empty")]
    DegenerateStep { iteration: usize },
    #[error("insufficient data for rate estimation")]
    InsufficientData,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
