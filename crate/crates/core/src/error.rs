use thiserror::Error;

/// Errors produced by graph construction, index computation, and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("pair ({0}, {0}) is not a pair of distinct vertices")]
    SamePair(usize),
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("{what} is limited to n <= {max}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("invalid tree spec: {0}")]
    InvalidTreeSpec(String),
    #[error("cycle length must be at least 3, got {0}")]
    InvalidCycleLength(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
