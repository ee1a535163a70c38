use quiver_core::QuiverError;
use thiserror::Error;

use crate::Poly;

#[derive(Debug, Error)]
pub enum ShuffleError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("polynomial is not symmetric in the variables of colour {colour}")]
    NotSymmetric { colour: usize },
    #[error("variable {var} does not belong to weight {weight}")]
    StrayVariable { var: String, weight: String },
    #[error("internal consistency error: shuffle sum not divisible by z{colour}_{} - z{colour}_{}, remainder {remainder}", .a + 1, .b + 1)]
    NotPolynomial { colour: usize, a: usize, b: usize, remainder: Box<Poly> },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
