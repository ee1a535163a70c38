use crate::env::{EnvElt, Pbw};
use crate::theta::{component, theta_component, ThetaClass};
use crate::LoopError;

/// An element of the completion `Û(n⁺_ell)`, given by its components `π_ℓ`.
pub struct Family<'a> {
    lift: Box<dyn Fn(i64) -> Result<EnvElt, LoopError> + 'a>,
}

impl<'a> Family<'a> {
    pub fn new(f: impl Fn(i64) -> Result<EnvElt, LoopError> + 'a) -> Self {
        Family { lift: Box::new(f) }
    }

    /// The family of a single (finite) element.
    pub fn constant(pbw: &'a Pbw<'a>, x: EnvElt) -> Self {
        Family::new(move |l| component(pbw, &x, l))
    }

    pub fn unit() -> Self {
        Family::new(|_| Ok(EnvElt::one()))
    }

    pub fn theta(pbw: &'a Pbw<'a>, class: ThetaClass, max_window: usize) -> Self {
        Family::new(move |l| theta_component(pbw, class, l, max_window))
    }

    pub fn at(&self, level: i64) -> Result<EnvElt, LoopError> {
        (self.lift)(level)
    }
}

/// Outcome of [`limit_multiply`]: the component and the depth `m` at which
/// two consecutive depths first agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitProduct {
    pub value: EnvElt,
    pub depth: usize,
}

/// `(x·y)_ℓ = π_ℓ(x̃_{ℓ−2m} · ỹ_{ℓ−2m})`, increasing `m` until two consecutive
/// depths give the same component. Levels move in steps of two, as in the
/// even ladder `Y_{θ,(2ℓ)}`.
pub fn limit_multiply(
    pbw: &Pbw<'_>,
    x: &Family<'_>,
    y: &Family<'_>,
    level: i64,
    max_depth: usize,
) -> Result<LimitProduct, LoopError> {
    let mut prev: Option<EnvElt> = None;
    for m in 0..=max_depth {
        let l = level - 2 * m as i64;
        let z = component(pbw, &pbw.mul(&x.at(l)?, &y.at(l)?)?, level)?;
        if prev.as_ref() == Some(&z) {
            return Ok(LimitProduct { value: z, depth: m - 1 });
        }
        prev = Some(z);
    }
    Err(LoopError::Precision { depth: max_depth })
}
