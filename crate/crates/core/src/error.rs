use thiserror::Error;

use crate::graph::Edge;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the universe 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("universe mismatch: {left} vs {right} vertices")]
    UniverseMismatch { left: usize, right: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },

    #[error("edges {0} and {1} share a vertex")]
    EdgesNotDisjoint(Edge, Edge),

    #[error("not a matching: vertex {0} appears twice")]
    NotAMatching(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("two-path integration impossible: {0}")]
    Exceptional(crate::kit::ExceptionalCase),

    #[error("graph is a disjoint union of cycles with at most one path")]
    ExceptionalFamily,

    #[error("graph has {n} vertices, limit for this operation is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("search budget exceeded")]
    BudgetExceeded,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
