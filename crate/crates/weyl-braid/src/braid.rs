use std::fmt;

use quiver_core::{AffineData, BigRational, CoweightVector, Quiver};

use crate::weyl::{translation_element, Automorphism, IntMat, WeylError};
use crate::simple_reflection;

/// A braid group letter: `T_i^{±1}` or a diagram automorphism `π^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Letter {
    T(usize, i8),
    Auto(Automorphism, i8),
}

impl Letter {
    pub fn inverse(&self) -> Letter {
        match self {
            Letter::T(i, e) => Letter::T(*i, -e),
            Letter::Auto(a, e) => Letter::Auto(a.clone(), -e),
        }
    }

    fn matrix(&self, q: &Quiver) -> IntMat {
        match self {
            Letter::T(i, _) => simple_reflection(q, *i).action,
            Letter::Auto(a, 1) => a.matrix(),
            Letter::Auto(a, _) => a.inverse().matrix(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i, e) if *e > 0 => write!(f, "{}", i + 1),
            Letter::T(i, _) => write!(f, "-{}", i + 1),
            Letter::Auto(a, e) if *e > 0 => write!(f, "{}", a.name),
            Letter::Auto(a, _) => write!(f, "{}^-1", a.name),
        }
    }
}

/// A freely reduced word in the braid generators and automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// `T_{i_1} ⋯ T_{i_k}`.
    pub fn positive(word: &[usize]) -> Self {
        let mut w = Self::new();
        for &i in word {
            w.push(Letter::T(i, 1));
        }
        w
    }

    /// Appends a letter, cancelling against an inverse at the end.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, o: &BraidWord) -> BraidWord {
        let mut w = self.clone();
        for l in &o.letters {
            w.push(l.clone());
        }
        w
    }

    pub fn inverse(&self) -> BraidWord {
        let mut w = BraidWord::new();
        for l in self.letters.iter().rev() {
            w.push(l.inverse());
        }
        w
    }

    /// Image in the extended Weyl group: the letterwise product acting on ℤI.
    pub fn weyl_image(&self, q: &Quiver) -> IntMat {
        self.letters.iter().fold(IntMat::identity(q.num_vertices()), |acc, l| acc.mul(&l.matrix(q)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `L_λ = T_{λ+μ} T_μ⁻¹` for the dominant shift `μ = N·2ρ̌` with `N` minimal.
pub fn braid_l_lambda(
    q: &Quiver,
    aff: &AffineData,
    lambda: &CoweightVector,
    autos: &[Automorphism],
) -> Result<BraidWord, WeylError> {
    let worst = (1..q.num_vertices()).map(|i| -lambda.0[i].clone()).max().unwrap_or_default();
    let two = BigRational::from_integer(2.into());
    let n = (worst / &two).ceil().to_integer();
    let n = if n < 0.into() { 0.into() } else { n };
    let finite: Vec<BigRational> =
        (1..q.num_vertices()).map(|_| BigRational::from_integer(n.clone()) * &two).collect();
    let mu = aff.coweight_from_finite(&finite);
    braid_l_lambda_with(q, aff, lambda, &mu, autos)
}

/// `L_λ = T_{λ+μ} T_μ⁻¹` for a caller-chosen `μ` with `μ` and `λ+μ` dominant.
pub fn braid_l_lambda_with(
    q: &Quiver,
    aff: &AffineData,
    lambda: &CoweightVector,
    mu: &CoweightVector,
    autos: &[Automorphism],
) -> Result<BraidWord, WeylError> {
    let sum = lambda.add(mu);
    let finite = 1..q.num_vertices();
    if !mu.is_dominant_on(finite.clone()) || !sum.is_dominant_on(finite) {
        return Err(WeylError::Domain(format!("{mu} and {sum} must both be dominant")));
    }
    let plus = translation_element(q, aff, &sum, autos)?.reduced_word()?;
    let minus = translation_element(q, aff, mu, autos)?.reduced_word()?;
    Ok(plus.concat(&minus.inverse()))
}
