use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph6 error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid family specification: {0}")]
    Family(String),

    #[error("labeling error: {0}")]
    Labeling(String),

    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("labeling is not a double Roman dominating function")]
    InvalidLabeling,

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeGuard { what: &'static str, size: usize, limit: usize },

    #[error("time budget exhausted")]
    BudgetExhausted,

    #[error("bondage undefined: the graph has no edges")]
    BondageUndefined,

    #[error("{0}")]
    Precondition(String),

    #[error("DIMACS error on line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("assignment does not satisfy clause {0}")]
    Unsatisfied(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Errors raised by a cost guard or a time budget rather than by bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::SizeGuard { .. } | Error::BudgetExhausted | Error::TooManyVertices(_))
    }
}
