use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p and q must be coprime (got {p} and {q})")]
    NotCoprime { p: u32, q: u32 },

    #[error("p and q must both be at least 2 (got {p} and {q})")]
    ExponentTooSmall { p: u32, q: u32 },

    #[error("{0} is a jump point of the signature function")]
    BreakpointEvaluation(Rational),

    #[error("evaluation point {0} must lie strictly inside (0,1)")]
    OutOfRange(Rational),

    #[error("hermitian form is numerically singular at x = {x}; perturb x")]
    NearSingularForm { x: Rational },

    #[error("seifert matrix must be square and non-empty")]
    NonSquareMatrix,

    #[error("torus knot T(2,q) needs odd q >= 3 (got {0})")]
    InvalidTwoStrandOrder(u32),

    #[error("malformed step function: {0}")]
    MalformedStepFunction(&'static str),

    #[error("invalid rational {0:?}: expected a/b with optional sign and positive denominator")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
