use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidType(String),

    #[error("rank {rank} is not allowed for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("coweight {0} is not dominant")]
    NotDominant(String),

    #[error("coweight {0} is minuscule, no wobbly witness exists")]
    Minuscule(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("genus must be at least 2, got {0}")]
    Genus(i64),

    #[error("coordinate {0} is out of range")]
    CoordinateRange(i64),

    #[error("negative tangent dimension {value} in weight {weight}")]
    NegativeTangentDimension { weight: usize, value: i64 },

    #[error("operation requires a simple type, got `{0}`")]
    NotSimple(String),

    #[error("type `{0}` is not covered by this operation")]
    NotCovered(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no witness found for {0}")]
    WitnessNotFound(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
