use thiserror::Error;

/// Errors raised while reading the edge-list format. Every variant names the
/// 1-based line it was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for declared n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} is not in a graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("vertex set must not be empty")]
    EmptySet,
    #[error("{what}: size {actual} exceeds the supported limit {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coloring has {actual} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("color {color} at vertex {vertex} is outside the palette of size {palette}")]
    PaletteMismatch {
        vertex: usize,
        color: u32,
        palette: u32,
    },
    #[error("coloring is not proper ({count} monochromatic edges); check properness first")]
    ImproperColoring { count: usize },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors that signal an exceeded size or complexity limit.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
