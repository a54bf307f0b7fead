use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edges {0}-{1} and {2}-{3} share a vertex")]
    NotAMatching(usize, usize, usize, usize),

    #[error("vertex sets are not disjoint (both contain {0})")]
    NotDisjoint(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid parameters for {family}: {message}")]
    InvalidParams { family: &'static str, message: String },

    #[error("no vertex cut exists: the graph is complete")]
    NoVertexCut,

    #[error("{0}")]
    Domain(String),

    #[error("{path}:{line}: {source}")]
    Corpus {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
