use num_traits::Zero;
use quiver_core::{BigRational, CoweightVector};

use crate::env::{EnvElt, OrderKind, Pbw};
use crate::LoopError;

/// `κ = (a, b]` with `a = None` for `−∞` and `b = None` for `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeIdealSpec {
    pub theta: CoweightVector,
    pub lower: Option<BigRational>,
    pub upper: Option<BigRational>,
}

impl SlopeIdealSpec {
    pub fn new(theta: CoweightVector, lower: Option<BigRational>, upper: Option<BigRational>) -> Result<Self, LoopError> {
        if let (Some(a), Some(b)) = (&lower, &upper) {
            if a > b {
                return Err(LoopError::Configuration(format!("empty slope interval ({a}, {b}]")));
            }
        }
        Ok(SlopeIdealSpec { theta, lower, upper })
    }

    /// `κ_0 = (−∞, 0]`.
    pub fn nonpositive(theta: CoweightVector) -> Self {
        SlopeIdealSpec { theta, lower: None, upper: Some(BigRational::zero()) }
    }

    pub fn contains(&self, mu: &BigRational) -> bool {
        self.lower.as_ref().map_or(true, |a| mu > a) && self.upper.as_ref().map_or(true, |b| mu <= b)
    }
}

/// Image in `Y_{θ,κ}` at the classical level: with `n_ell` ordered by
/// increasing slope, the ideal `J_{θ,κ}` is spanned by the normal monomials
/// having a factor of slope outside `κ`.
pub fn slope_project(pbw: &Pbw<'_>, spec: &SlopeIdealSpec, x: &EnvElt) -> Result<EnvElt, LoopError> {
    if pbw.order().kind != OrderKind::Slope || pbw.order().theta != spec.theta {
        return Err(LoopError::Configuration(format!("PBW order is not the θ = {} slope order", spec.theta)));
    }
    let alg = pbw.algebra();
    for (m, _) in x.terms() {
        if !pbw.is_normal(m) {
            return Err(LoopError::Configuration("slope projection needs normal monomials".into()));
        }
        if let Some(s) = m.iter().find(|s| !alg.is_negative(s)) {
            return Err(LoopError::Domain(format!("{} is not in n_ell", alg.label(s))));
        }
    }
    let order = pbw.order();
    Ok(x.filter(|m| m.iter().all(|s| spec.contains(&order.slope_of(alg, s).expect("negative symbols have slopes")))))
}
