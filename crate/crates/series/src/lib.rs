//! Truncated series in `z^d q^k`, the plethystic exponential, character
//! formulas built from Kac polynomials, and monomial symmetric functions.
//!
//! The variable `q` tracks half the cohomological degree; characters only use
//! non-positive powers of `q`.

mod character;
mod graded;
mod symfunc;

pub use character::{coha_character, hn_product, semistable_character, slopes_in_window, SlopeSet};
pub use graded::{plethystic_exp, GradedSeries, SeriesError, TruncationWindow};
pub use symfunc::{elementary, partitions, power_sum, symfunc_mul, Partition, SymFunc};
