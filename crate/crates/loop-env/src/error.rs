use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("not of finite ADE type: {0}")]
    Type(String),
    #[error("straightening cap exceeded at monomial {monomial}")]
    Truncation { monomial: String },
    #[error("grading window exceeded: {0}")]
    Window(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no stabilization up to depth {depth}")]
    Precision { depth: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Weyl(#[from] weyl_braid::WeylError),
    #[error(transparent)]
    Quiver(#[from] quiver_core::QuiverError),
}
