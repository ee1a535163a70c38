use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("dimension mismatch: expected {expected} vertices, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("arrow {index} is an edge loop at vertex {vertex}")]
    EdgeLoop { index: usize, vertex: usize },
    #[error("arrow {index} refers to vertex {vertex}, but the quiver has {count} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, count: usize },
    #[error("not of affine ADE type: {0}")]
    NotAffine(String),
    #[error("not of finite ADE type: {0}")]
    NotFinite(String),
    #[error("slope of the zero dimension vector is undefined")]
    UndefinedSlope,
    #[error("{0}")]
    Domain(String),
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },
}
