use num_rational::BigRational;
use thiserror::Error;

/// Failures of the exact kernels.
///
/// Identity verifiers never return these for a failed identity; a failed
/// identity is reported as data in an [`IdentityReport`](crate::IdentityReport).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at q = {0}")]
    Pole(BigRational),
    #[error("constant term of the series is not invertible")]
    NonInvertibleConstant,
    #[error("leading coefficient of the divisor is not invertible")]
    NonInvertibleLeading,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("coefficient index {index} exceeds series order {order}")]
    IndexBeyondOrder { index: usize, order: usize },
    #[error("Stirling index ({n}, {m}) outside the table (n_max = {n_max}, need m <= n <= n_max)")]
    StirlingIndex { n: usize, m: usize, n_max: usize },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: usize, sum: usize },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("order k must be at least 1")]
    ZeroOrder,
    #[error("lambda is required for this family")]
    MissingLambda,
    #[error("path {path} is not available for family {family}")]
    UnsupportedPath { family: &'static str, path: &'static str },
    #[error("index {n} exceeds the context size n_max = {n_max}")]
    IndexBeyondContext { n: usize, n_max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
