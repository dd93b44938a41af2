use thiserror::Error;

/// Errors raised by the algebra, ghost and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator `{name}` at position {pos}")]
    UnknownGenerator { name: String, pos: usize },

    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),

    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("generator set mismatch: [{left}] vs [{right}]")]
    GeneratorMismatch { left: String, right: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("expected integer coefficients, got {0}")]
    IntegerRingRequired(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("no matrix assigned to generator `{0}`")]
    MissingGenerator(String),

    #[error("ghost vector is not in the image of the ghost map: division by p^{index} is inexact at coordinate {index}")]
    NotInImage { index: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("truncation must be at least {min}, got {got}")]
    TruncationTooSmall { min: usize, got: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
