use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on node `{label}`")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: edge weight must be strictly positive, got {weight}")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("node index {index} out of range for graph with {n} nodes")]
    NodeOutOfRange { index: usize, n: usize },

    #[error("unknown node label `{0}`")]
    UnknownLabel(String),

    #[error("node `{0}` has no part assignment")]
    Unassigned(String),

    #[error("node `{label}` assigned to both `{first}` and `{second}`")]
    ConflictingAssignment { label: String, first: String, second: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("target set needs at least 2 nodes, got {0}")]
    TooFewTargets(usize),

    #[error("target node {0} is not a singleton part")]
    TargetNotSingleton(usize),

    #[error("node {0} is not a skeleton node")]
    NotInSkeleton(usize),

    #[error("graph has {n} nodes, above the limit of {limit} for this routine")]
    GraphTooLarge { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
