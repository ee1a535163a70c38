use quiver_core::QuiverError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("map {arrow} has shape {got:?}, expected {expected:?}")]
    Shape { arrow: String, expected: (usize, usize), got: (usize, usize) },
    #[error("preprojective relation fails at vertex {vertex}")]
    Relation { vertex: usize },
    #[error("vertex {0} out of range")]
    Vertex(usize),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
