use thiserror::Error;

/// Failures raised by the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation pole at L = {at}")]
    EvalPole { at: String },
    #[error("series is not invertible (constant term vanishes)")]
    NotInvertible,
    #[error("series is not a delta series (order must be exactly 1)")]
    NotDelta,
    #[error("inner series of a composition must have order >= 1")]
    CompositionOrder,
    #[error("series of order {order} cannot be divided by t^{shift}")]
    OrderTooLow { order: usize, shift: usize },
    #[error("fractional power requires constant term 1")]
    UnitConstantRequired,
    #[error("polynomial of degree {degree} needs truncation order > {degree}, got {order}")]
    TruncationTooShort { degree: usize, order: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
