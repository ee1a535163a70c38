use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::Mat;
use crate::{CoweightVector, DimVector, Quiver, QuiverError};

/// Affine root data: the imaginary root δ, marks `r_i = δ_i`, Coxeter number
/// `h = Σ r_i` and highest root `φ = δ − α_0` of the finite part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineData {
    pub delta: DimVector,
    pub marks: Vec<i64>,
    pub coxeter: i64,
    pub highest_root: DimVector,
    /// Rank `e` of the finite part.
    pub rank: usize,
}

impl AffineData {
    /// θ̌ with `θ̌_0 = −Σ r_i θ̌_i`, from its finite-part values.
    pub fn coweight_from_finite(&self, finite: &[BigRational]) -> CoweightVector {
        CoweightVector::affine_from_finite(&self.marks, finite)
    }
}

/// Computes δ as the primitive positive generator of the radical of the
/// symmetrized Euler form, after checking the form is affine.
pub fn find_delta(q: &Quiver) -> Result<AffineData, QuiverError> {
    let n = q.num_vertices();
    if n < 2 {
        return Err(QuiverError::NotAffine("an affine quiver has at least two vertices".into()));
    }
    let cartan = q.cartan_matrix();
    let kernel = Mat::from_i64(&cartan).nullspace();
    if kernel.len() != 1 {
        return Err(QuiverError::NotAffine(format!("radical has dimension {}", kernel.len())));
    }
    let v = &kernel[0];
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if ints.iter().any(|x| x.is_negative()) {
        g = -g;
    }
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    if ints.iter().any(|x| !x.is_positive()) {
        return Err(QuiverError::NotAffine("radical is not spanned by a positive vector".into()));
    }
    let finite: Vec<Vec<i64>> = (1..n).map(|i| (1..n).map(|j| cartan[i][j]).collect()).collect();
    for k in 1..=finite.len() {
        let minor: Vec<Vec<i64>> = finite[..k].iter().map(|r| r[..k].to_vec()).collect();
        if !Mat::from_i64(&minor).determinant().is_positive() {
            return Err(QuiverError::NotAffine("finite part is not positive definite".into()));
        }
    }
    let marks: Vec<i64> = ints.iter().map(|x| x.to_i64().expect("mark overflow")).collect();
    if marks[0] != 1 {
        return Err(QuiverError::NotAffine(format!("vertex 0 has mark {}, expected the affine vertex", marks[0])));
    }
    let delta = DimVector(marks.clone());
    let highest_root = &delta - &q.simple(0);
    Ok(AffineData { coxeter: delta.total(), highest_root, delta, marks, rank: n - 1 })
}

/// An integer polynomial in one variable, coefficients by increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacPolynomial(pub Vec<i64>);

impl KacPolynomial {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl fmt::Display for KacPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Kac polynomial of an affine quiver: `1` on real roots, `e + t` on
/// positive multiples of δ, `0` elsewhere.
pub fn kac_polynomial(q: &Quiver, aff: &AffineData, d: &DimVector) -> Result<KacPolynomial, QuiverError> {
    if d.len() != q.num_vertices() {
        return Err(QuiverError::Dimension { expected: q.num_vertices(), got: d.len() });
    }
    if !d.is_nonneg() {
        return Err(QuiverError::Domain(format!("{d} is not in ℕI")));
    }
    if d.is_zero() {
        return Ok(KacPolynomial(vec![]));
    }
    if q.symmetric_form(d, d)? == 2 {
        return Ok(KacPolynomial(vec![1]));
    }
    let k = d[0];
    if k > 0 && *d == aff.delta.scale(k) {
        return Ok(KacPolynomial(vec![aff.rank as i64, 1]));
    }
    Ok(KacPolynomial(vec![]))
}

/// μ(d) = (θ̌, d) / (ρ̌, d).
pub fn slope(theta: &CoweightVector, d: &DimVector) -> Result<BigRational, QuiverError> {
    let den = d.total();
    if den == 0 {
        return Err(QuiverError::UndefinedSlope);
    }
    Ok(theta.pair(d)? / BigRational::from_integer(den.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    #[test]
    fn kronecker_delta() {
        let aff = find_delta(&Quiver::kronecker()).unwrap();
        assert_eq!(aff.delta, DimVector(vec![1, 1]));
        assert_eq!(aff.coxeter, 2);
        assert_eq!(aff.highest_root, DimVector(vec![0, 1]));
    }

    #[test]
    fn exceptional_coxeter_numbers() {
        assert_eq!(find_delta(&Quiver::affine_e(6)).unwrap().coxeter, 12);
        let e7 = find_delta(&Quiver::affine_e(7)).unwrap();
        assert_eq!(e7.coxeter, 18);
        assert_eq!(e7.marks, vec![1, 2, 3, 4, 3, 2, 1, 2]);
        assert_eq!(find_delta(&Quiver::affine_e(8)).unwrap().coxeter, 30);
    }

    #[test]
    fn rejects_non_affine() {
        assert!(find_delta(&Quiver::finite_a(3)).is_err());
        let wild = Quiver::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(find_delta(&wild).is_err());
    }

    #[test]
    fn slope_examples() {
        let theta = CoweightVector::from_ints(&[-1, 1]);
        assert_eq!(slope(&theta, &DimVector(vec![1, 1])).unwrap(), qi(0));
        assert_eq!(slope(&theta, &DimVector(vec![0, 1])).unwrap(), qi(1));
        assert!(slope(&theta, &DimVector(vec![0, 0])).is_err());
    }
}
