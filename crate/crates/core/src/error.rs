use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph would have {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph is acyclic")]
    Acyclic,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("quotient matrix entry ({row},{col}) is not an integer")]
    NonIntegralQuotient { row: usize, col: usize },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("invalid rotation: {0}")]
    InvalidRotation(String),

    #[error("family parameter error: {0}")]
    FamilyParameter(String),

    #[error("family {0} has no recorded expectation")]
    NoExpectation(String),

    #[error("family {0} carries no freeness claim")]
    NoClaim(String),

    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
