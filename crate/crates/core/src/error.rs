use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the power-sum engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    /// A division by a vanishing quantity while building entry `index`.
    #[error("pole at index {index}: {reason}")]
    Pole { index: usize, reason: String },

    #[error("series constant term is not invertible")]
    NonInvertibleConstant,

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid confluent parameter b = {0}: must not be zero or a negative integer")]
    InvalidB(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("constant term mismatch: expected {expected}, found {found}")]
    ConstantTermMismatch { expected: String, found: String },

    #[error("bracketing failure: found {found} of {wanted} sign changes below z = {window}")]
    BracketingFailure {
        found: usize,
        wanted: usize,
        window: String,
    },

    #[error("precision unreachable: {0}")]
    PrecisionUnreachable(String),

    #[error("tail bound invalid: {0}")]
    TailBoundInvalid(String),

    #[error("entry {index} is not positive")]
    NonPositiveEntry { index: usize },

    #[error("table has no entry {index}")]
    MissingEntry { index: usize },

    #[error("real-zero regime not asserted for {0}; Euler-Rayleigh bounds refused")]
    UnassertedRegime(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for conditions that come from the mathematics (poles, degenerate
    /// parameters) rather than from malformed input.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::ZeroDenominator
                | Error::Pole { .. }
                | Error::NonInvertibleConstant
                | Error::DegenerateParameters(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
