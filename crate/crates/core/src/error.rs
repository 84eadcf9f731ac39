use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {n} exceeds the vertex cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("canonical labelling supports at most {limit} vertices, got {n}")]
    CanonicalLimit { n: usize, limit: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not an eigenvalue of the graph")]
    NotAnEigenvalue(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
