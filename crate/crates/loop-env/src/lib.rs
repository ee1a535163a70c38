//! Classical-level Lie theory for affine ADE quivers: the simple Lie algebra
//! of the finite part, the elliptic Lie algebra `uce(g_f[s^{±1}, t])`, PBW
//! straightening in its enveloping algebra, braid and translation operators,
//! slope quotients, the completion `Û(n⁺_ell)` and the `A_1^(1)` identities.
//!
//! Central symbols: `c_ℓ = t^ℓ s^{-1}ds` and `c_{k,ℓ} = t^ℓ s^{k-1}ds`. The bracket is
//! `[x s^k t^ℓ, y s^h t^n] = [x,y] s^{k+h} t^{ℓ+n} + (x,y)·ω` where `ω` is
//! `k c_{ℓ+n}` if `k + h = 0`, `(kn − ℓh)/(ℓ+n) · c_{k+h,ℓ+n}` if `k + h ≠ 0`
//! and `ℓ + n ≥ 1`, and `0` otherwise.

mod braid;
mod env;
mod error;
mod identity;
mod lie;
mod limit;
mod pbwcount;
mod rootsys;
mod slope;
mod theta;

pub use braid::{
    apply_to_env, apply_word, braid_t, braid_t_env, exp_ad, project_negative, translation_formula, translation_l,
    truncated_braid, truncated_braid_word,
};
pub use env::{divided_power, EnvElt, Monomial, OrderKind, Pbw, PbwOrder};
pub use error::LoopError;
pub use identity::{
    a1_setup, verify_identity_a1, IdentityCoefficient, IdentityReport, IdentitySeries, MAX_IDENTITY_ORDER,
};
pub use lie::{LieEltLoop, LoopAlgebra, Sym};
pub use limit::{limit_multiply, Family, LimitProduct};
pub use pbwcount::{n_ell_basis, pbw_counts};
pub use rootsys::{FiniteBasis, FiniteBracket, RootSystemF};
pub use slope::{slope_project, SlopeIdealSpec};
pub use theta::{
    completion_slope, component, e_sym, exp_series, predicted_commutator, theta_component, theta_image, ThetaClass,
};

/// `[a, b]` in the elliptic Lie algebra.
pub fn bracket_ell(alg: &LoopAlgebra, a: &LieEltLoop, b: &LieEltLoop) -> LieEltLoop {
    alg.bracket(a, b)
}

/// The simple Lie algebra of a finite ADE quiver.
pub fn build_simple_lie(qf: &quiver_core::Quiver) -> Result<RootSystemF, LoopError> {
    RootSystemF::new(qf)
}
