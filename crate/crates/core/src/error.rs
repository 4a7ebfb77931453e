use thiserror::Error;

/// Errors raised by polynomial construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("odd power of {0} present; polynomial is not even in that generator")]
    OddPower(String),
    #[error("weight mismatch for {name}: expected degree {expected}, got {found}")]
    WeightMismatch {
        name: String,
        expected: u32,
        found: String,
    },
    #[error("polynomial {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Errors raised by rational series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("odd exponent t^{0}; series live in even degrees only")]
    OddExponent(u32),
    #[error("denominator factor (1 - t^{0}) must have a positive even exponent")]
    BadFactor(u32),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("divisor numerator {0} is not a product of (1 - t^k) factors up to sign")]
    NotCyclotomic(String),
    #[error("malformed series JSON: {0}")]
    Json(String),
}

/// Errors raised by the end-to-end verification pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{what}: assembled {assembled} but closed form is {closed_form}")]
    Mismatch {
        what: String,
        assembled: String,
        closed_form: String,
    },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}
