use thiserror::Error;

/// Errors raised by graph construction, solvers and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bag {bag} contains vertex {vertex}, but the graph has {n} vertices")]
    BagVertexOutOfRange { bag: usize, vertex: usize, n: usize },
    #[error("input of size {size} exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("tree decomposition is not smooth")]
    NotSmooth,
    #[error("({0}, {1}) is not a tree edge")]
    NotTreeEdge(usize, usize),
    #[error("vertex {0} is not contained in any bag")]
    UnknownVertex(usize),
    #[error("d = {d} must satisfy 1 <= d <= {size}")]
    BadD { d: usize, size: usize },
    #[error("node set does not induce a subtree")]
    NotASubtree,
    #[error("edge ({0}, {1}) is not coloured")]
    UncoloredEdge(usize, usize),
    #[error("sequence is not sorted in non-increasing order")]
    NotSorted,
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("could not embed the excess graph: {0}")]
    EmbedFail(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
