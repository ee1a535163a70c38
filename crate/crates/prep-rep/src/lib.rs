//! Finite-dimensional representations of the preprojective algebra `Π_Q`
//! and the reflection functors `S_i`, `S_i′` in kernel/cokernel form.
//!
//! A representation stores one matrix per arrow of the doubled quiver, in the
//! order of [`Quiver::doubled_arrows`](quiver_core::Quiver::doubled_arrows):
//! Ω first, then the starred arrows.

mod error;
mod io;
mod iso;
mod random;
mod reflect;
mod rep;

pub use error::RepError;
pub use io::{parse_rep, write_rep};
pub use iso::{hom_space, isomorphism, IsoResult, MAX_ISO_DIM};
pub use random::{random_nilpotent, random_preprojective};
pub use reflect::{reflect, torsion_membership, Direction, TorsionFlags};
pub use rep::PiRep;
