use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Lie type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("weight has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parabolic node set: {0}")]
    InvalidParabolic(String),
    #[error("parabolic node set is empty")]
    EmptyParabolic,
    #[error("weight {0} is not dominant for the required (sub)system")]
    NotDominant(String),
    #[error("exterior power {p} out of range 0..={max}")]
    POutOfRange { p: usize, max: usize },
    #[error("peeling produced a negative multiplicity at weight {0}")]
    NegativeMultiplicity(String),
    #[error("unsupported partition shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid bracket: {0}")]
    InvalidBracket(String),
    #[error("convention calibration failed: {0}")]
    ConventionError(String),
    #[error("cohomology pattern does not cancel as forced: {0}")]
    CancellationMismatch(String),
    #[error("computation excluded at desk scale: {0}")]
    ComputeExcluded(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("matrix size {size} out of range for {kind}")]
    SizeOutOfRange { kind: String, size: usize },
    #[error("degree {t} exceeds the bound {max} for {alg}")]
    DegreeBoundExceeded { alg: String, t: usize, max: usize },
    #[error("singular matrix")]
    Singular,
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
