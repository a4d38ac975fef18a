use thiserror::Error;

/// Errors raised by the algebra, height and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("zero X-degree")]
    ZeroXDegree,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("degenerate partial degree: {0}")]
    DegenerateDegree(String),

    #[error("not squarefree")]
    NotSquarefree,

    #[error("not a zero of P")]
    NotOnCurve,

    #[error("not a regular zero")]
    NotRegular,

    #[error("A is divisible by P")]
    DivisibleByP,

    #[error("no nontrivial kernel")]
    NoKernel,

    #[error("inseparable/degenerate: {0}")]
    Degenerate(String),

    #[error("parameter violation: {0}")]
    Params(String),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
