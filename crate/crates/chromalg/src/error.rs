use thiserror::Error;

/// Library-wide error type. Every variant carries a short machine-readable
/// code via [`Error::code`] so the CLI can emit structured failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge not in graph: ({0}, {1})")]
    EdgeNotInGraph(usize, usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("canonicalization bound exceeded: n = {n} > {bound}")]
    CanonBoundExceeded { n: usize, bound: usize },
    #[error("enumeration bound exceeded: {what} requires n <= {bound}, got {n}")]
    EnumBoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("edge bound exceeded: {what} requires |E| <= {bound}, got {edges}")]
    EdgeBoundExceeded {
        what: &'static str,
        edges: usize,
        bound: usize,
    },
    #[error("invalid graph spec: {0}")]
    InvalidGraphSpec(String),
    #[error("invalid graph6 data: {0}")]
    InvalidGraph6(String),
    #[error("constraint violation: {0}")]
    Constraint(String),
    #[error("graphs have mixed vertex counts: {0} vs {1}")]
    MixedSizes(usize, usize),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
}

impl Error {
    /// Stable identifier used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EdgeNotInGraph(..) => "edge-not-in-graph",
            Error::VertexOutOfRange(..) => "vertex-out-of-range",
            Error::CanonBoundExceeded { .. } => "canon-bound-exceeded",
            Error::EnumBoundExceeded { .. } => "enum-bound-exceeded",
            Error::EdgeBoundExceeded { .. } => "edge-bound-exceeded",
            Error::InvalidGraphSpec(_) => "invalid-graph-spec",
            Error::InvalidGraph6(_) => "invalid-graph6",
            Error::Constraint(_) => "constraint-violation",
            Error::MixedSizes(..) => "mixed-sizes",
            Error::EmptyInput(_) => "empty-input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
