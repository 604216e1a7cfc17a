use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("series must have constant term {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    #[error("expected a homogeneous polynomial, found weights {0:?}")]
    NotHomogeneous(Vec<u64>),

    #[error("part of weight {0} is not allowed; parts must have weight at least 2")]
    WeightTooSmall(u64),

    #[error("graph has {n} vertices but this operation is limited to {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("malformed graph6 string {input:?}: {reason}")]
    Graph6 { input: String, reason: String },

    #[error("malformed polynomial json: {0}")]
    Json(String),

    #[error("degree {value} is outside the supported range {min}..={max}")]
    DegreeOutOfRange { value: u32, min: u32, max: u32 },

    #[error("not a permutation group: {0}")]
    NotAGroup(String),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("independent computations disagree: {0}")]
    CrossCheck(String),

    #[error("non-integral value {value} where an integer count was expected ({context})")]
    NotIntegral { value: String, context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
