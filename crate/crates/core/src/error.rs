use crate::digraph::Vertex;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} out of range 1..={1}")]
    InvalidVertex(Vertex, u32),

    #[error("loop ({0},{0}) is not allowed")]
    LoopArc(Vertex),

    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(Vertex, Vertex),

    #[error("arc ({0},{1}) is not present")]
    MissingArc(Vertex, Vertex),

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("vertex sequence is not a path or cycle component of the CCE graph: {0}")]
    NotAComponent(String),

    #[error("not a disjoint union of paths and cycles: component {0:?}")]
    NotPathsAndCycles(Vec<Vertex>),

    #[error("vertex {0} has degree {1}, but this operation requires maximum degree 2")]
    DegreeTooHigh(Vertex, usize),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("not realizable: {0}")]
    NotRealizable(String),

    #[error("digraph exceeds the degree bound (max indegree {0}, max outdegree {1})")]
    NotBounded(u32, u32),

    #[error("not a bounded acyclic digraph: {0}")]
    NotBoundedAcyclic(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
