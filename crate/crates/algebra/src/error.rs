use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NotExact,
    #[error("divergent limit")]
    DivergentLimit,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("coefficients too large for rational-root search")]
    CoefficientOverflow,
    #[error("pole at the evaluation point")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
}
