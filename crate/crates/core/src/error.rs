use thiserror::Error;

/// Errors reported by graph construction, verification, and search.
///
/// `ResourceExhausted` is the only variant a caller is expected to retry
/// (with a larger budget); everything else indicates invalid input. The CLI
/// maps `ResourceExhausted` to exit code 2 and the rest to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("symbol {value} out of range 1..={n}")]
    SymbolOutOfRange { value: u32, n: u32 },

    #[error("vertex index {index} out of range for graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("coloring covers {covered} vertices but the graph has {order}")]
    CoverageMismatch { covered: usize, order: usize },

    #[error("coloring is not proper: vertices {u} and {v} are adjacent and share class {class}")]
    NotProper { u: usize, v: usize, class: usize },

    #[error("class {class} is empty")]
    EmptyClass { class: usize },

    #[error("vertex {vertex} is isolated; total domination is undefined")]
    IsolatedVertex { vertex: usize },

    #[error("graph carries no pair labels")]
    MissingPairLabels,

    #[error("search budget exhausted after {nodes} nodes")]
    ResourceExhausted { nodes: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("certificate: {0}")]
    Certificate(String),
}

impl Error {
    /// True for the budget-exhaustion outcome, which is distinct from both
    /// "no" answers and invalid input.
    pub fn is_resource_exhausted(&self) -> bool {
        matches!(self, Error::ResourceExhausted { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
