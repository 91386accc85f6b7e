use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty space")]
    EmptySpace,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("matrix is not square")]
    NonSquare,

    #[error("non-invertible leading coefficient")]
    NonInvertibleLeading,

    #[error("division by zero")]
    DivisionByZero,

    #[error("factorial blow-up; use recursive engine (n = {0})")]
    CycleCapExceeded(usize),

    #[error("resource cap exceeded: {what} would need {size} (cap {cap})")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("ground-set mismatch between partitions")]
    GroundSetMismatch,

    #[error("partitions {0} and {1} are not adjacent")]
    IncompatiblePartitions(usize, usize),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("root finder did not converge; residual {residual}")]
    RootFinding { residual: f64 },

    #[error("not a multiset-valued Frobenius map: {0}")]
    NonIntegralMultiplicity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
