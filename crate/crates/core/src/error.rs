use thiserror::Error;

/// Errors raised by the engine.
///
/// Several variants double as executable assertions: `NotDivisible` and
/// `NotPolynomial` are only reachable if a claimed polynomiality identity
/// fails, so the verification suites treat them as hard failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at q = {0}")]
    PoleAtPoint(String),
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("expected a polynomial in q, found {0}")]
    NotPolynomial(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid Hessenberg function {values:?}: {reason}")]
    InvalidHessenberg { values: Vec<usize>, reason: String },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("size {n} exceeds the configured limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("the single-column staircase has no peel")]
    IsBaseTableau,
    #[error("{0:?} is not flat")]
    NotFlat(Vec<usize>),
    #[error("{0:?} is not non-flat")]
    NotNonFlat(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
