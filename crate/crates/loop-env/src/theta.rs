use std::fmt;

use num_traits::Zero;
use quiver_core::BigRational;

use crate::env::{EnvElt, OrderKind, Pbw};
use crate::lie::{LieEltLoop, LoopAlgebra, Sym};
use crate::rootsys::FiniteBasis;
use crate::LoopError;

/// Fundamental classes of the components `Y_{i,(n)}` (length-`n` points on
/// `C_i`) and `Z_{i,n}` (sheaves of class `−α_i + nδ` on `C_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaClass {
    Y { i: usize, n: u32 },
    Z { i: usize, n: i64 },
}

impl fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaClass::Y { i, n } => write!(f, "Y({i},{n})"),
            ThetaClass::Z { i, n } => write!(f, "Z({i},{n})"),
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sign(n: i64) -> BigRational {
    if n.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

/// Coefficients `p_0, …, p_m` of `exp(Σ_{k≥1} h_i s^{−k} u^{−k}/k)` in `u^{−1}`,
/// from `j p_j = Σ_{k=1}^{j} h_i s^{−k} p_{j−k}`.
pub fn exp_series(pbw: &Pbw<'_>, i: usize, m: usize) -> Result<Vec<EnvElt>, LoopError> {
    let alg = pbw.algebra();
    let mut p = vec![EnvElt::one()];
    for j in 1..=m {
        let mut acc = EnvElt::zero();
        for k in 1..=j {
            let h = EnvElt::monomial(vec![alg.cartan(i, -(k as i64), 0)]);
            acc = acc.add(&pbw.mul(&h, &p[j - k])?);
        }
        p.push(acc.scale(&BigRational::new(1.into(), (j as i64).into())));
    }
    Ok(p)
}

fn check_vertex(alg: &LoopAlgebra, i: usize) -> Result<(), LoopError> {
    if i == 0 || i >= alg.vertices() {
        return Err(LoopError::Domain(format!("vertex {i} is not a finite vertex")));
    }
    Ok(())
}

/// `x_i⁺ s^k` as a symbol.
pub fn e_sym(alg: &LoopAlgebra, i: usize, s: i64) -> Sym {
    Sym::X { x: FiniteBasis::Root(alg.root_system().simple(i - 1)), s, t: 0 }
}

/// `Θ(Y(i,n)) = (−1)^{n−1} h_i s^{−n}`, and `Θ(Z(i,n))` as the sum of the
/// terms `(−1)^n x_i⁺ s^{j−n} p_j` for `j ≤ window`, where `p_j` is the
/// `u^{−j}` coefficient of `exp(Σ h_i s^{−k} u^{−k}/k)`.
pub fn theta_image(pbw: &Pbw<'_>, class: ThetaClass, window: usize) -> Result<EnvElt, LoopError> {
    let alg = pbw.algebra();
    match class {
        ThetaClass::Y { i, n } => {
            check_vertex(alg, i)?;
            if n == 0 {
                return Err(LoopError::Domain("Y(i,n) needs n ≥ 1".into()));
            }
            let h = LieEltLoop::basis(alg.cartan(i, -i64::from(n), 0));
            Ok(EnvElt::from_lie(&h.scale(&sign(i64::from(n) - 1))))
        }
        ThetaClass::Z { i, n } => {
            check_vertex(alg, i)?;
            let p = exp_series(pbw, i, window)?;
            let mut out = EnvElt::zero();
            for (j, pj) in p.iter().enumerate() {
                let e = EnvElt::monomial(vec![e_sym(alg, i, j as i64 - n)]);
                out = out.add(&pbw.mul(&e, pj)?);
            }
            Ok(out.scale(&sign(n)))
        }
    }
}

/// Slope of a symbol of `n⁺_ell` under the completion order; `None` stands for `+∞`.
pub fn completion_slope(pbw: &Pbw<'_>, s: &Sym) -> Result<Option<BigRational>, LoopError> {
    let alg = pbw.algebra();
    if pbw.order().kind != OrderKind::Completion {
        return Err(LoopError::Configuration("completion slopes need the completion order".into()));
    }
    let w = alg.weight(s);
    let r = pbw.order().theta.pair(&w)?;
    if r > BigRational::zero() {
        return Ok(Some(-BigRational::from_integer(w.total().into()) / r));
    }
    let imaginary = match s {
        Sym::X { x: FiniteBasis::Cartan(_), s, .. } | Sym::CK { k: s, .. } => *s < 0,
        _ => false,
    };
    if imaginary {
        Ok(None)
    } else {
        Err(LoopError::Domain(format!("{} is not in n⁺_ell", alg.label(s))))
    }
}

/// `π_ℓ`: the image in `U(m)/(m_{<ℓ} U(m))`, keeping normal monomials all of
/// whose factors have slope at least `ℓ`.
pub fn component(pbw: &Pbw<'_>, x: &EnvElt, level: i64) -> Result<EnvElt, LoopError> {
    let lvl = q(level);
    let mut out = EnvElt::zero();
    for (m, c) in x.terms() {
        let mut keep = true;
        for s in m {
            if let Some(mu) = completion_slope(pbw, s)? {
                keep &= mu >= lvl;
            }
        }
        if keep {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// The exact component `π_ℓ(Θ(class))`: for `Z` the sum is cut where
/// `x_i⁺ s^{j−n}` drops below slope `ℓ`, which must happen within `max_window`.
pub fn theta_component(pbw: &Pbw<'_>, class: ThetaClass, level: i64, max_window: usize) -> Result<EnvElt, LoopError> {
    let window = match class {
        ThetaClass::Y { .. } => 0,
        ThetaClass::Z { i, n } => {
            check_vertex(pbw.algebra(), i)?;
            let lvl = q(level);
            let needed = (0..)
                .find(|&j: &usize| {
                    let mu = completion_slope(pbw, &e_sym(pbw.algebra(), i, j as i64 - n)).expect("positive root");
                    mu.expect("finite slope") < lvl
                })
                .expect("slopes decrease to −∞");
            if needed > max_window + 1 {
                return Err(LoopError::Truncation { monomial: format!("{class} needs {needed} terms at level {level}") });
            }
            needed.saturating_sub(1)
        }
    };
    component(pbw, &theta_image(pbw, class, window)?, level)
}

/// `[Y, Z] = (C_i·C_j) Z'` with `C_i·C_j = −a_ij`: the predicted commutator of
/// `Θ(Y(j,d))` and `Θ(Z(i,n))` is `−a_ji Θ(Z(i,n+d))`.
pub fn predicted_commutator(pbw: &Pbw<'_>, j: usize, d: u32, i: usize, n: i64, window: usize) -> Result<EnvElt, LoopError> {
    let a = pbw.algebra().quiver().cartan_matrix()[j][i];
    Ok(theta_image(pbw, ThetaClass::Z { i, n: n + i64::from(d) }, window)?.scale(&q(-a)))
}

