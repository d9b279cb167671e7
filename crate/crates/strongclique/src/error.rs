use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, exceeding the supported maximum of {1}")]
    TooManyVertices(usize, usize),
    #[error("vertex {0} out of range for graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("connection set contains the identity element")]
    IdentityInConnectionSet,
    #[error("connection set is not closed under inversion (element {0})")]
    ConnectionSetNotInverseClosed(usize),
    #[error("group element {0} out of range for group of order {1}")]
    ElementOutOfRange(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set is not a clique in the graph")]
    NotAClique,
    #[error("vertex set is not independent in the graph")]
    NotIndependent,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exact solver supports at most {1} vertices, got {0}")]
    SolverCapExceeded(usize, usize),
    #[error("group order {0} exceeds the materialization cap {1}")]
    GroupTooLarge(u128, u128),
    #[error("group order overflows")]
    OrderOverflow,
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("dimacs parse error: {0}")]
    Dimacs(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
