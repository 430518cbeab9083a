use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graphs have different vertex counts ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("edge set is not contained in the reference graph: missing ({0}, {1})")]
    NotASubgraph(usize, usize),

    #[error("leader set is empty")]
    EmptyLeaderSet,

    #[error("vertex {0} appears more than once in the leader set")]
    DuplicateLeader(usize),

    #[error("instance has {n} vertices; exhaustive search supports at most {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("sequence is not a PMI sequence of this graph: entry {index}: {reason}")]
    InvalidPmi { index: usize, reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error("verification failed with {count} violation(s); first: {first}")]
    VerificationFailure { count: usize, first: String },

    #[error("result invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
