use thiserror::Error;

/// Errors raised by the constructions and checks of this crate.
///
/// Variants ending in `Failure` or `Contradiction` mean that an exact identity
/// which is supposed to hold did not; they are never recovered from internally.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("unsupported divisor {0}: leading coefficient after clearing monomials is not +1 or -1")]
    UnsupportedDivisor(String),

    #[error("cannot evaluate at a point with a zero coordinate")]
    ZeroEvaluationPoint,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("chain of degree {found} where degree {expected} was expected")]
    DegreeMismatch { expected: u8, found: u8 },

    #[error("chain is not a cycle")]
    NotACycle,

    #[error("entry is not a Laurent polynomial: {0}")]
    NotLaurent(String),

    #[error("chain-map identity failed: {0}")]
    ChainMapFailure(String),

    #[error("identity failed: {0}")]
    Contradiction(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
