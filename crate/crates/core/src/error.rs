use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A generator produced a graph whose degrees disagree with the closed form
    /// it was built to realize.
    #[error("generator bug: {0}")]
    GeneratorBug(String),

    #[error("precondition violated at index {index}: {msg}")]
    Precondition { index: usize, msg: String },

    /// No partition meeting the requested bounds exists for this input.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("case 1 hypothesis violated by component {index} (weight {weight} > alpha*k); use case 2")]
    Case1Hypothesis { index: usize, weight: usize },

    #[error("invalid constraints: {0}")]
    InvalidConstraints(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
