//! The shuffle algebra of a quiver: symmetric polynomials in coloured variables over
//! `ℚ[ε_e, ħ]`, with the kernel-weighted symmetrization product that models the negative
//! half of the quiver Yangian.

mod algebra;
mod element;
mod error;
mod fast;
pub mod poly;
pub mod relations;
mod twist;

pub use algebra::{taut_action, KernelMutation, Parameters, ShuffleAlgebra, TautClass};
pub use element::{generator, ShuffleElt};
pub use error::ShuffleError;
pub use poly::{Poly, Var};
pub use relations::{check_matrix, check_relation, relation_matrix, RelationCheck, RelationInstance, RelationKind};
pub use twist::{twist, twist_iso, TwistForm};
