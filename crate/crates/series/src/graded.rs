use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use quiver_core::{BigRational, DimVector};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("Exp needs a series without constant term")]
    ConstantTerm,
    #[error("q-exponents of mixed sign; truncation would not be exact")]
    MixedQSign,
    #[error("weight {0} is not in ℕI")]
    NegativeWeight(DimVector),
    #[error("windows of different rank")]
    RankMismatch,
    #[error(transparent)]
    Quiver(#[from] quiver_core::QuiverError),
}

/// Which coefficients a series keeps: `d <= max_weight` componentwise,
/// `Σ d_i <= max_total` and `|k| <= max_qdeg`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncationWindow {
    pub max_weight: DimVector,
    pub max_total: i64,
    pub max_qdeg: i64,
}

impl TruncationWindow {
    pub fn new(max_weight: DimVector, max_total: i64, max_qdeg: i64) -> Self {
        assert!(max_weight.is_nonneg() && max_total >= 0 && max_qdeg >= 0, "window bounds must be nonnegative");
        TruncationWindow { max_weight, max_total, max_qdeg }
    }

    /// All `d` with `|d| <= total` on `n` vertices.
    pub fn total(n: usize, total: i64, max_qdeg: i64) -> Self {
        Self::new(DimVector(vec![total; n]), total, max_qdeg)
    }

    pub fn rank(&self) -> usize {
        self.max_weight.len()
    }

    pub fn contains(&self, d: &DimVector, k: i64) -> bool {
        d.le(&self.max_weight) && d.total() <= self.max_total && k.abs() <= self.max_qdeg
    }

    /// The smaller of two windows.
    pub fn meet(&self, o: &TruncationWindow) -> TruncationWindow {
        assert_eq!(self.rank(), o.rank(), "windows of different rank");
        let w = DimVector(self.max_weight.iter().zip(o.max_weight.iter()).map(|(a, b)| *a.min(b)).collect());
        TruncationWindow::new(w, self.max_total.min(o.max_total), self.max_qdeg.min(o.max_qdeg))
    }

    /// Every `d ∈ ℕI` inside the weight bounds, by (total, lex).
    pub fn weights(&self) -> Vec<DimVector> {
        let mut out: Vec<Vec<i64>> = vec![vec![]];
        for &b in self.max_weight.iter() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=b).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        let mut ds: Vec<DimVector> =
            out.into_iter().map(DimVector).filter(|d| d.total() <= self.max_total).collect();
        ds.sort_by_key(|d| (d.total(), d.clone()));
        ds
    }
}

/// A truncated series `Σ c_{d,k} z^d q^k` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    terms: BTreeMap<(DimVector, i64), BigRational>,
    window: TruncationWindow,
}

impl GradedSeries {
    pub fn zero(window: &TruncationWindow) -> Self {
        GradedSeries { terms: BTreeMap::new(), window: window.clone() }
    }

    pub fn one(window: &TruncationWindow) -> Self {
        Self::monomial(window, DimVector::zero(window.rank()), 0, BigRational::one())
    }

    pub fn monomial(window: &TruncationWindow, d: DimVector, k: i64, c: BigRational) -> Self {
        let mut s = Self::zero(window);
        s.add_term(d, k, c);
        s
    }

    pub fn window(&self) -> &TruncationWindow {
        &self.window
    }

    /// Adds `c z^d q^k`, dropping it when outside the window.
    pub fn add_term(&mut self, d: DimVector, k: i64, c: BigRational) {
        if c.is_zero() || !self.window.contains(&d, k) {
            return;
        }
        let key = (d, k);
        let v = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, d: &DimVector, k: i64) -> BigRational {
        self.terms.get(&(d.clone(), k)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DimVector, i64, &BigRational)> {
        self.terms.iter().map(|((d, k), c)| (d, *k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&DimVector::zero(self.window.rank()), 0)
    }

    /// Re-truncates to a smaller window.
    pub fn restrict_window(&self, window: &TruncationWindow) -> Self {
        let mut out = Self::zero(&self.window.meet(window));
        for (d, k, c) in self.terms() {
            out.add_term(d.clone(), k, c.clone());
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&DimVector, i64) -> bool) -> Self {
        let mut out = Self::zero(&self.window);
        for (d, k, c) in self.terms() {
            if keep(d, k) {
                out.add_term(d.clone(), k, c.clone());
            }
        }
        out
    }

    pub fn add(&self, o: &GradedSeries) -> GradedSeries {
        let mut out = Self::zero(&self.window.meet(&o.window));
        for (d, k, c) in self.terms().chain(o.terms()) {
            out.add_term(d.clone(), k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &GradedSeries) -> GradedSeries {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> GradedSeries {
        let mut out = Self::zero(&self.window);
        for (d, k, x) in self.terms() {
            out.add_term(d.clone(), k, x * c);
        }
        out
    }

    /// Truncated product. Exact when both factors have q-exponents of one sign.
    pub fn mul(&self, o: &GradedSeries) -> GradedSeries {
        let mut out = Self::zero(&self.window.meet(&o.window));
        for (d1, k1, c1) in self.terms() {
            for (d2, k2, c2) in o.terms() {
                let d = d1 + d2;
                if out.window.contains(&d, k1 + k2) {
                    out.add_term(d, k1 + k2, c1 * c2);
                }
            }
        }
        out
    }

    /// Adams operation `z^d q^k ↦ z^{nd} q^{nk}`.
    pub fn adams(&self, n: i64) -> GradedSeries {
        let mut out = Self::zero(&self.window);
        for (d, k, c) in self.terms() {
            out.add_term(d.scale(n), k * n, c.clone());
        }
        out
    }

    /// `exp(g)` for `g` without constant term and sign-coherent q-exponents.
    pub fn exp(&self) -> Result<GradedSeries, SeriesError> {
        self.check_exp_domain()?;
        let mut total = Self::one(&self.window);
        let mut term = Self::one(&self.window);
        let mut m = 1i64;
        loop {
            term = term.mul(self).scale(&BigRational::new(1.into(), m.into()));
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term);
            m += 1;
        }
    }

    fn check_exp_domain(&self) -> Result<(), SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::ConstantTerm);
        }
        if let Some((d, _, _)) = self.terms().find(|(d, _, _)| !d.is_nonneg()) {
            return Err(SeriesError::NegativeWeight(d.clone()));
        }
        let pos = self.terms().any(|(_, k, _)| k > 0);
        let neg = self.terms().any(|(_, k, _)| k < 0);
        if pos && neg {
            return Err(SeriesError::MixedQSign);
        }
        Ok(())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms().all(|(_, _, c)| c.is_integer() && !c.is_negative())
    }
}

/// `Exp(f) = exp(Σ_{n≥1} ψ_n(f)/n)`, truncated to the window of `f`.
pub fn plethystic_exp(f: &GradedSeries) -> Result<GradedSeries, SeriesError> {
    f.check_exp_domain()?;
    let mut g = GradedSeries::zero(&f.window);
    let mut n = 1i64;
    loop {
        let psi = f.adams(n);
        if psi.is_zero() {
            break;
        }
        g = g.add(&psi.scale(&BigRational::new(1.into(), n.into())));
        n += 1;
    }
    g.exp()
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|((d1, k1), _), ((d2, k2), _)| (d1.total(), d1, -k1).cmp(&(d2.total(), d2, -k2)));
        for (n, ((d, k), c)) in keys.into_iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * z^{d} * q^{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_core::qi;

    #[test]
    fn geometric_series() {
        let w = TruncationWindow::total(1, 6, 0);
        let z = GradedSeries::monomial(&w, DimVector(vec![1]), 0, qi(1));
        let e = plethystic_exp(&z).unwrap();
        for n in 0..=6 {
            assert_eq!(e.coeff(&DimVector(vec![n]), 0), qi(1));
        }
    }

    #[test]
    fn zq_square_term() {
        let w = TruncationWindow::total(1, 4, 4);
        let zq = GradedSeries::monomial(&w, DimVector(vec![1]), 1, qi(1));
        let e = plethystic_exp(&zq).unwrap();
        assert_eq!(e.coeff(&DimVector(vec![2]), 2), qi(1));
        assert_eq!(e.coeff(&DimVector(vec![2]), 1), qi(0));
    }

    #[test]
    fn domain_errors() {
        let w = TruncationWindow::total(1, 3, 3);
        assert_eq!(plethystic_exp(&GradedSeries::one(&w)), Err(SeriesError::ConstantTerm));
        let mixed = GradedSeries::monomial(&w, DimVector(vec![0]), 1, qi(1))
            .add(&GradedSeries::monomial(&w, DimVector(vec![1]), -1, qi(1)));
        assert_eq!(plethystic_exp(&mixed), Err(SeriesError::MixedQSign));
    }
}
