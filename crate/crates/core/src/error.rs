use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),

    #[error("generator index {index} is out of range for a system of rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },

    #[error("unknown generator `{token}` at column {column}")]
    UnknownGenerator { token: String, column: usize },

    #[error("word is not reduced")]
    NotReduced,

    #[error("element is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("closure search exceeded the node cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("element does not normalise the standard parabolic subgroup")]
    NotNormalising,

    #[error("generator subset is not spherical")]
    NotSpherical,

    #[error("element is not cyclically fully commutative")]
    NotCfc,

    #[error("geometric reducedness test is numerically ambiguous at letter {position}")]
    NumericallyAmbiguous { position: usize },

    #[error("word of length {len} exceeds the oracle length cap of {cap}")]
    WordTooLong { len: usize, cap: usize },

    #[error("certificate replay failed at step {step}: {reason}")]
    InvalidCertificate { step: usize, reason: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
