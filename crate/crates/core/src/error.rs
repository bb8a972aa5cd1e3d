use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("edge endpoint cannot have degree 0")]
    ZeroDegree,
    #[error("invalid parameters (N={n}, k={k}): need N ≥ k+3, k ≥ 1")]
    InvalidParams { n: usize, k: usize },
    #[error("graph on {n} vertices exceeds the exact isomorphism bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("move hypotheses not met: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
