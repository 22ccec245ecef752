use thiserror::Error;

use crate::graph::{Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Edge-list input rejected; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// graph6 input rejected; `byte` is the 0-based offset of the offending character.
    #[error("graph6 byte {byte}: {message}")]
    Graph6 { byte: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),

    #[error("vertex sets overlap at {0}")]
    OverlappingSets(Vertex),

    #[error("seed pair must be two distinct vertices, got {0} twice")]
    SameVertex(Vertex),

    #[error("graph is not connected")]
    NotConnected,

    #[error("vertex {0} is adjacent to every other vertex")]
    DominatingVertex(Vertex),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("graph order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    /// An unconditional structural claim failed; this is a bug in the toolkit.
    #[error("internal check failed: {0}")]
    ClaimViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
