use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("expected {expected} values, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex function is not typical: vertices {0} and {1} share a value")]
    NotTypical(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid cellular string {string:?}: {reason}")]
    InvalidString { string: String, reason: String },
    #[error("string {string} is outside the domain of {op}")]
    OutsideDomain { op: &'static str, string: String },
    #[error("no common lower bound")]
    NoLowerBound,
    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("complex would have {count} simplices, limit is {limit}")]
    TooLarge { count: u64, limit: u64 },
    #[error("branch index {0} out of range")]
    InvalidBranch(usize),
    #[error("sampling exhausted after {proposals} proposals ({accepted} accepted)")]
    SamplingExhausted { proposals: usize, accepted: usize },
    #[error("malformed document: {0}")]
    Malformed(String),
}
