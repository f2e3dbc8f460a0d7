use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid hypergeometric parameters: {0}")]
    InvalidSpec(String),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("gamma function has a pole at {0}")]
    Pole(f64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("characters belong to different primes ({0} and {1})")]
    ContextMismatch(u64, u64),

    #[error("expected {expected} lower characters, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("value {re}{im:+}i does not snap to a rational with denominator {denominator} (residual {residual:e}, tolerance {tolerance:e})")]
    Snap {
        re: f64,
        im: f64,
        denominator: i64,
        residual: f64,
        tolerance: f64,
    },

    #[error("curve has bad reduction modulo {0}")]
    SingularReduction(u64),

    #[error("lambda = {0} is excluded (must avoid 0 and -1)")]
    ExcludedLambda(String),

    #[error("quadratic twist needs a curve of the form y^2 = x^3 + ax^2 + bx + c")]
    NotShortForm,

    #[error("twist parameter {0} is not a nonzero square-free integer")]
    NotSquareFree(i64),

    #[error("{p} divides the denominator of a coefficient")]
    NotIntegral { p: u64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
