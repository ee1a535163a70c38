//! Weyl group elements with their faithful action on ℤI, reduced words by
//! right descents, translation elements `t_λ`, and braid words.
//!
//! Group elements are compared by their matrices, never by words.

mod braid;
mod weyl;

pub use braid::{braid_l_lambda, braid_l_lambda_with, BraidWord, Letter};
pub use weyl::{
    a_rotation, reduced_word, simple_reflection, translation_element, translation_matrix, Automorphism, ExtWeylElt,
    IntMat, WeylElt, WeylError,
};
