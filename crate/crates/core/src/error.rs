use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid multipartite spec: {0}")]
    InvalidPartition(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("graph has {n} vertices, exceeding the oracle limit of {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("graph is not bipartite with respect to the given sides: edge {0}-{1}")]
    NotBipartite(usize, usize),
    #[error("matching is not valid for this graph: {0}")]
    InvalidMatching(String),
    #[error("matching of size {given} is not maximum (maximum is {maximum})")]
    NotMaximum { given: usize, maximum: usize },
    #[error("degree sequences are not bigraphic: {0}")]
    NotBigraphic(String),
    #[error("interval realization infeasible: {0}")]
    IntervalInfeasible(String),
    #[error("parameters out of supported range: {0}")]
    UnsupportedRange(String),
    #[error("internal construction error: {0}")]
    Internal(String),
    #[error("fan extension precondition failed: {}", .0.join("; "))]
    Precondition(Vec<String>),
    #[error("search cap {cap} exceeds the limit {limit} for this target pair")]
    CapExceeded { cap: usize, limit: usize },
}
