use num_traits::One;
use quiver_core::{BigRational, CoweightVector, DimVector};
use weyl_braid::{braid_l_lambda, BraidWord, Letter};

use crate::env::{EnvElt, OrderKind, Pbw};
use crate::lie::{LieEltLoop, LoopAlgebra, Sym};
use crate::rootsys::FiniteBasis;
use crate::LoopError;

/// Longest `ad`-string before an exponential is declared non-nilpotent.
const NILPOTENCY_CAP: usize = 8;

/// `exp(c·ad x)(v)`.
pub fn exp_ad(alg: &LoopAlgebra, x: &LieEltLoop, c: &BigRational, v: &LieEltLoop) -> Result<LieEltLoop, LoopError> {
    let mut out = v.clone();
    let mut term = v.clone();
    for n in 1..=NILPOTENCY_CAP {
        term = alg.bracket(x, &term).scale(&(c / BigRational::from_integer(n.into())));
        if term.is_zero() {
            return Ok(out);
        }
        out = out.add(&term);
    }
    Err(LoopError::Window(format!("ad {} is not nilpotent within {NILPOTENCY_CAP} steps", alg.display(x))))
}

/// `T_i = exp(ad x_i⁺) exp(−ad x_i⁻) exp(ad x_i⁺)`, or its inverse.
pub fn braid_t(alg: &LoopAlgebra, i: usize, inverse: bool, v: &LieEltLoop) -> Result<LieEltLoop, LoopError> {
    if i >= alg.vertices() {
        return Err(LoopError::Domain(format!("vertex {i} out of range")));
    }
    let (xp, xm) = (alg.chevalley(i, true, 0), alg.chevalley(i, false, 0));
    let one = BigRational::one();
    let (a, b) = if inverse { (-one.clone(), one) } else { (one.clone(), -one) };
    let v = exp_ad(alg, &xp, &a, v)?;
    let v = exp_ad(alg, &xm, &b, &v)?;
    exp_ad(alg, &xp, &a, &v)
}

/// A Lie automorphism extended multiplicatively to `U(g_ell)`.
pub fn apply_to_env(
    pbw: &Pbw<'_>,
    x: &EnvElt,
    f: impl Fn(&LieEltLoop) -> Result<LieEltLoop, LoopError>,
) -> Result<EnvElt, LoopError> {
    let mut out = EnvElt::zero();
    for (m, c) in x.terms() {
        let mut acc = EnvElt::one();
        for s in m {
            acc = acc.concat(&EnvElt::from_lie(&f(&LieEltLoop::basis(s.clone()))?));
        }
        out.add_scaled(&pbw.normalize(&acc)?, c);
    }
    Ok(out)
}

pub fn braid_t_env(pbw: &Pbw<'_>, i: usize, inverse: bool, x: &EnvElt) -> Result<EnvElt, LoopError> {
    apply_to_env(pbw, x, |v| braid_t(pbw.algebra(), i, inverse, v))
}

/// Applies a braid word `[l_1 … l_k]` as `T_{l_1} ∘ ⋯ ∘ T_{l_k}`.
pub fn apply_word(alg: &LoopAlgebra, word: &BraidWord, v: &LieEltLoop) -> Result<LieEltLoop, LoopError> {
    let mut v = v.clone();
    for l in word.letters().iter().rev() {
        v = match l {
            Letter::T(i, e) => braid_t(alg, *i, *e < 0, &v)?,
            Letter::Auto(a, _) => {
                return Err(LoopError::Domain(format!("diagram automorphism {} has no Lie action here", a.name)))
            }
        };
    }
    Ok(v)
}

/// `L_λ` through the braid word of `weyl_braid::braid_l_lambda`; `λ` must
/// lie in the coroot lattice so that no diagram automorphism occurs.
pub fn translation_l(alg: &LoopAlgebra, lambda: &CoweightVector, v: &LieEltLoop) -> Result<LieEltLoop, LoopError> {
    let word = braid_l_lambda(alg.quiver(), alg.affine(), lambda, &[])?;
    apply_word(alg, &word, v)
}

/// The closed form `L_λ(x s^n) = (−1)^⟨λ,α⟩ x s^{n−⟨λ,α⟩}` for root vectors;
/// `None` if `v` has a Cartan or central component.
pub fn translation_formula(alg: &LoopAlgebra, lambda: &CoweightVector, v: &LieEltLoop) -> Option<LieEltLoop> {
    let mut out = LieEltLoop::zero();
    for (s, c) in v.terms() {
        let Sym::X { x: FiniteBasis::Root(k), s: n, t } = s else {
            return None;
        };
        let alpha = alg.root_system().root(*k);
        let mut a = DimVector::zero(alg.vertices());
        for (i, x) in alpha.iter().enumerate() {
            a[i + 1] = *x;
        }
        let p = lambda.pair_int(&a);
        let sign = if p.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
        out.add_term(Sym::X { x: FiniteBasis::Root(*k), s: n - p, t: *t }, sign);
    }
    Some(out)
}

/// `pr: U(g_ell) → U(n_ell)`, killing monomials with a factor outside `n_ell`.
/// The order must place `n_ell` to the right.
pub fn project_negative(pbw: &Pbw<'_>, x: &EnvElt) -> Result<EnvElt, LoopError> {
    if pbw.order().kind != OrderKind::Slope {
        return Err(LoopError::Configuration("projection onto U(n_ell) needs the slope order".into()));
    }
    let alg = pbw.algebra();
    Ok(x.filter(|m| m.iter().all(|s| alg.is_negative(s))))
}

/// `T̄_i(x) = pr(T_i(x))` for `x` in `U(n_ell)`.
pub fn truncated_braid(pbw: &Pbw<'_>, i: usize, x: &EnvElt) -> Result<EnvElt, LoopError> {
    let alg = pbw.algebra();
    if x.terms().any(|(m, _)| m.iter().any(|s| !alg.is_negative(s))) {
        return Err(LoopError::Domain("truncated braid operators act on U(n_ell)".into()));
    }
    project_negative(pbw, &braid_t_env(pbw, i, false, x)?)
}

/// `T̄_w = T̄_{i_1} ∘ ⋯ ∘ T̄_{i_l}` along a word `[i_1 … i_l]`.
pub fn truncated_braid_word(pbw: &Pbw<'_>, word: &[usize], x: &EnvElt) -> Result<EnvElt, LoopError> {
    let mut x = x.clone();
    for &i in word.iter().rev() {
        x = truncated_braid(pbw, i, &x)?;
    }
    Ok(x)
}

