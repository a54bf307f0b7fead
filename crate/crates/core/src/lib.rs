//! Matching-theory toolkit: maximum matching, Gallai–Edmonds decomposition,
//! equimatchability and factor-criticality recognition, vertex cuts, graph
//! constructions, and a harness of statement checkers that certify results
//! on constructed families, exhaustively enumerated graphs and corpora.

pub mod census;
pub mod connectivity;
pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod verdict;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Relabel, Vertex, VertexSet};
pub use matching::{KonigCertificate, Matching};
