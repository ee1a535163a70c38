use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Quiver, QuiverError};

/// An element of the root lattice ℤI. Simple roots are the standard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn from_slice(v: &[i64]) -> Self {
        DimVector(v.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `>= 0`, i.e. in ℕI.
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpos(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    /// Height Σ d_i.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        DimVector(self.0.iter().map(|&x| x.checked_mul(k).expect("dimension vector overflow")).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for DimVector {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, o: &DimVector) -> DimVector {
        assert_eq!(self.len(), o.len(), "dimension vectors of different length");
        DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a.checked_add(*b).expect("dimension vector overflow")).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, o: &DimVector) -> DimVector {
        assert_eq!(self.len(), o.len(), "dimension vectors of different length");
        DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a.checked_sub(*b).expect("dimension vector overflow")).collect())
    }
}

impl Add for DimVector {
    type Output = DimVector;
    fn add(self, o: DimVector) -> DimVector {
        &self + &o
    }
}

impl Sub for DimVector {
    type Output = DimVector;
    fn sub(self, o: DimVector) -> DimVector {
        &self - &o
    }
}

impl AddAssign<&DimVector> for DimVector {
    fn add_assign(&mut self, o: &DimVector) {
        *self = &*self + o;
    }
}

impl SubAssign<&DimVector> for DimVector {
    fn sub_assign(&mut self, o: &DimVector) {
        *self = &*self - o;
    }
}

impl Neg for &DimVector {
    type Output = DimVector;
    fn neg(self) -> DimVector {
        DimVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for DimVector {
    type Output = DimVector;
    fn neg(self) -> DimVector {
        -&self
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An element of the coweight lattice, stored by its pairings `λ_i = (λ, α_i)`,
/// so that `(λ, d) = Σ λ_i d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoweightVector(pub Vec<BigRational>);

impl CoweightVector {
    pub fn zero(n: usize) -> Self {
        CoweightVector(vec![BigRational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        CoweightVector(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    /// Fundamental coweight ω̌_i, the dual basis vector.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = BigRational::from_integer(1.into());
        v
    }

    /// ρ̌ = Σ ω̌_i.
    pub fn rho(n: usize) -> Self {
        Self::from_ints(&vec![1; n])
    }

    /// The simple coroot α̌_i, with `(α̌_i, α_j) = a_ij`.
    pub fn coroot(q: &Quiver, i: usize) -> Self {
        Self::from_ints(&q.cartan_matrix()[i])
    }

    /// Extends finite-part values `λ_1..λ_e` to an affine coweight with `λ_0 = −Σ r_i λ_i`,
    /// so that `(λ, δ) = 0`.
    pub fn affine_from_finite(marks: &[i64], finite: &[BigRational]) -> Self {
        assert_eq!(marks.len(), finite.len() + 1);
        let mut l0 = BigRational::zero();
        for (r, x) in marks[1..].iter().zip(finite) {
            l0 -= x * BigRational::from_integer((*r).into());
        }
        let mut v = vec![l0];
        v.extend(finite.iter().cloned());
        CoweightVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn pair(&self, d: &DimVector) -> Result<BigRational, QuiverError> {
        if self.len() != d.len() {
            return Err(QuiverError::Dimension { expected: self.len(), got: d.len() });
        }
        let mut s = BigRational::zero();
        for (l, x) in self.0.iter().zip(d.iter()) {
            s += l * BigRational::from_integer((*x).into());
        }
        Ok(s)
    }

    /// Integer pairing; panics if the coweight is not integral.
    pub fn pair_int(&self, d: &DimVector) -> i64 {
        let p = self.pair(d).expect("coweight/dimension length mismatch");
        assert!(p.is_integer(), "non-integral pairing");
        i64::try_from(p.to_integer()).expect("pairing overflow")
    }

    pub fn add(&self, o: &CoweightVector) -> CoweightVector {
        CoweightVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &CoweightVector) -> CoweightVector {
        CoweightVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigRational) -> CoweightVector {
        CoweightVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `(λ, α_i) >= 0` for every `i` in `vertices`.
    pub fn is_dominant_on(&self, vertices: impl IntoIterator<Item = usize>) -> bool {
        vertices.into_iter().all(|i| !self.0[i].is_negative())
    }
}

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
