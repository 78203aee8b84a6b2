use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A family or operation parameter violates its constraint.
    #[error("invalid parameter for {context}: {constraint}")]
    Parameter {
        context: String,
        constraint: String,
    },

    #[error("{what} exceeds the supported limit ({got} > {limit})")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("eigensolver did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("graph is not regular: {0}")]
    NonRegular(String),

    #[error("invalid gluing: {0}")]
    Gluing(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("cannot parse family spec `{input}`: {reason}")]
    FamilySyntax { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(context: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::Parameter {
            context: context.into(),
            constraint: constraint.into(),
        }
    }
}
