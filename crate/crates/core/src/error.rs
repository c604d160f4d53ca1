use thiserror::Error;

/// Errors raised by the quiver, search, procedure and triangulation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("frozen vertex {0}' cannot be mutated")]
    FrozenMutation(usize),

    /// A seed violates an invariant that holds for everything reachable
    /// from a framed seed.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// The input does not have the shape an operation requires
    /// (not type A, not a directed path, invalid arc set, ...).
    #[error("structure error: {0}")]
    Structure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("no maximal green sequence found")]
    NoMgs,

    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}
