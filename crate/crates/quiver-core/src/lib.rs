//! Quivers without edge loops, their root lattices and bilinear forms,
//! affine root data, Kac polynomials and slopes.
//!
//! Vertex `0` of an affine quiver is always the affine vertex; the finite
//! subquiver lives on vertices `1..=e`.

mod affine;
mod error;
pub mod io;
mod lattice;
pub mod linalg;
mod quiver;
mod roots;

pub use affine::{find_delta, kac_polynomial, slope, AffineData, KacPolynomial};
pub use error::QuiverError;
pub use lattice::{CoweightVector, DimVector};
pub use quiver::{Arrow, DoubledArrow, Quiver};
pub use roots::{finite_positive_roots, positive_real_roots, positive_roots_bfs};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an exact rational from a pair of machine integers.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Shorthand for an exact integral rational.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
