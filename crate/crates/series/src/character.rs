use std::collections::BTreeSet;
use std::ops::Bound;

use quiver_core::{find_delta, kac_polynomial, slope, BigRational, CoweightVector, DimVector, Quiver};

use crate::{plethystic_exp, GradedSeries, SeriesError, TruncationWindow};

/// A set of slopes: everything, finitely many values, or an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeSet {
    All,
    Values(BTreeSet<BigRational>),
    Interval(Bound<BigRational>, Bound<BigRational>),
}

impl SlopeSet {
    pub fn single(mu: BigRational) -> Self {
        SlopeSet::Values([mu].into_iter().collect())
    }

    pub fn contains(&self, mu: &BigRational) -> bool {
        match self {
            SlopeSet::All => true,
            SlopeSet::Values(v) => v.contains(mu),
            SlopeSet::Interval(lo, hi) => {
                let above = match lo {
                    Bound::Unbounded => true,
                    Bound::Included(a) => mu >= a,
                    Bound::Excluded(a) => mu > a,
                };
                let below = match hi {
                    Bound::Unbounded => true,
                    Bound::Included(b) => mu <= b,
                    Bound::Excluded(b) => mu < b,
                };
                above && below
            }
        }
    }
}

/// `Σ_{d ≠ 0, keep(d)} A_d(q^{-1})/(1 − q^{-1}) z^d` plus `prefactor · q^{-1}`,
/// the logarithm (in the Exp sense) of the character.
fn kac_generating_function(
    q: &Quiver,
    window: &TruncationWindow,
    prefactor: u32,
    keep: impl Fn(&DimVector) -> bool,
) -> Result<GradedSeries, SeriesError> {
    let aff = find_delta(q)?;
    if window.rank() != q.num_vertices() {
        return Err(SeriesError::RankMismatch);
    }
    let mut f = GradedSeries::zero(window);
    for d in window.weights() {
        if d.is_zero() || !keep(&d) {
            continue;
        }
        let a = kac_polynomial(q, &aff, &d)?;
        for (j, &c) in a.0.iter().enumerate() {
            // A_d(q^{-1}) q^{-m}, m >= 0
            for m in 0..=window.max_qdeg {
                let k = -(j as i64) - m;
                f.add_term(d.clone(), k, BigRational::from_integer(c.into()));
            }
        }
    }
    f.add_term(DimVector::zero(q.num_vertices()), -1, BigRational::from_integer(prefactor.into()));
    Ok(f)
}

/// `(1 − q^{-1})^{-dim A} · Exp(Σ_d A_d(q^{-1})/(1 − q^{-1}) z^d)` on the window.
pub fn coha_character(q: &Quiver, window: &TruncationWindow, dim_a: u32) -> Result<GradedSeries, SeriesError> {
    plethystic_exp(&kac_generating_function(q, window, dim_a, |_| true)?)
}

/// The same Exp with the Kac sum restricted to `d` whose θ-slope lies in `slopes`,
/// and prefactor `(1 − q^{-1})^{-prefactor}`.
pub fn semistable_character(
    q: &Quiver,
    theta: &CoweightVector,
    slopes: &SlopeSet,
    window: &TruncationWindow,
    prefactor: u32,
) -> Result<GradedSeries, SeriesError> {
    let f = kac_generating_function(q, window, prefactor, |d| {
        slopes.contains(&slope(theta, d).expect("d is nonzero"))
    })?;
    plethystic_exp(&f)
}

/// Distinct slopes of the nonzero weights in the window, increasing.
pub fn slopes_in_window(theta: &CoweightVector, window: &TruncationWindow) -> Vec<BigRational> {
    let set: BTreeSet<BigRational> = window
        .weights()
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| slope(theta, d).expect("d is nonzero"))
        .collect();
    set.into_iter().collect()
}

/// `(1 − q^{-1})^{-prefactor} · ∏_μ P_μ` over the slopes occurring in the window,
/// each factor taken without its own prefactor.
pub fn hn_product(
    q: &Quiver,
    theta: &CoweightVector,
    window: &TruncationWindow,
    prefactor: u32,
) -> Result<GradedSeries, SeriesError> {
    let mut acc = semistable_character(q, theta, &SlopeSet::Values(BTreeSet::new()), window, prefactor)?;
    for mu in slopes_in_window(theta, window).into_iter().rev() {
        acc = acc.mul(&semistable_character(q, theta, &SlopeSet::single(mu), window, 0)?);
    }
    Ok(acc)
}
