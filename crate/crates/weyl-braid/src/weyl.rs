use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use quiver_core::{AffineData, CoweightVector, DimVector, Quiver};
use thiserror::Error;

use crate::{BraidWord, Letter};

const MAX_WORD_LENGTH: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("descent did not terminate within {0} steps; element is not in the Weyl group")]
    Malformed(usize),
    #[error("element needs a diagram automorphism outside the supplied group; its action is {action}")]
    FactorizationUnavailable { action: IntMat },
    #[error("permutation {0:?} does not preserve the Cartan matrix")]
    NotAutomorphism(Vec<usize>),
    #[error("{0}")]
    Domain(String),
}

/// A square integer matrix acting on column vectors of ℤI.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMat { n, data: rows.iter().flatten().copied().collect() }
    }

    /// The matrix sending `α_i` to `α_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = IntMat { n, data: vec![0; n * n] };
        for (i, &p) in perm.iter().enumerate() {
            m.data[p * n + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat::identity(self.n)
    }

    /// Image of `α_j`.
    pub fn column(&self, j: usize) -> DimVector {
        DimVector((0..self.n).map(|i| self.get(i, j)).collect())
    }

    pub fn apply(&self, d: &DimVector) -> DimVector {
        assert_eq!(d.len(), self.n);
        DimVector(
            (0..self.n)
                .map(|i| {
                    (0..self.n).fold(0i64, |acc, j| {
                        acc.checked_add(self.get(i, j).checked_mul(d[j]).expect("overflow")).expect("overflow")
                    })
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j]
                        .checked_add(a.checked_mul(o.get(k, j)).expect("overflow"))
                        .expect("overflow");
                }
            }
        }
        IntMat { n, data }
    }

    /// `Some(π)` when this is the matrix of `α_i ↦ α_{π(i)}`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let col = self.column(j);
            let ones: Vec<usize> = (0..self.n).filter(|&i| col[i] == 1).collect();
            if ones.len() != 1 || col.iter().filter(|&&x| x != 0).count() != 1 {
                return None;
            }
            perm.push(ones[0]);
        }
        Some(perm)
    }

    /// `Mᵀ A M == A`.
    pub fn preserves_form(&self, a: &[Vec<i64>]) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = 0i64;
                for k in 0..n {
                    for l in 0..n {
                        s += self.get(k, i) * a[k][l] * self.get(l, j);
                    }
                }
                s == a[i][j]
            })
        })
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Cartan matrix shared by group elements of one quiver.
pub type Cartan = Arc<Vec<Vec<i64>>>;

/// An element of the Weyl group, canonically represented by its action on ℤI.
/// Equality and hashing use the action only.
#[derive(Debug, Clone)]
pub struct WeylElt {
    pub action: IntMat,
    cartan: Cartan,
}

impl PartialEq for WeylElt {
    fn eq(&self, o: &Self) -> bool {
        self.action == o.action
    }
}

impl Eq for WeylElt {}

impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.action.hash(h)
    }
}

impl WeylElt {
    pub fn identity(q: &Quiver) -> Self {
        WeylElt { action: IntMat::identity(q.num_vertices()), cartan: Arc::new(q.cartan_matrix()) }
    }

    /// Wraps a matrix; callers vouch that it lies in the Weyl group.
    pub fn from_action(q: &Quiver, action: IntMat) -> Self {
        WeylElt { action, cartan: Arc::new(q.cartan_matrix()) }
    }

    /// `s_{i_1} ∘ … ∘ s_{i_k}`.
    pub fn from_word(q: &Quiver, word: &[usize]) -> Self {
        let mut w = WeylElt::identity(q);
        for &i in word {
            w.action = right_reflect(&w.action, &w.cartan, i);
        }
        w
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        WeylElt { action: self.action.mul(&other.action), cartan: self.cartan.clone() }
    }

    pub fn apply(&self, d: &DimVector) -> DimVector {
        self.action.apply(d)
    }

    /// A reduced word `[i_1, …, i_ℓ]` with `self = s_{i_1} ⋯ s_{i_ℓ}`.
    pub fn reduced_word(&self) -> Result<Vec<usize>, WeylError> {
        let (residual, word) = descend(&self.action, &self.cartan)?;
        if !residual.is_identity() {
            return Err(WeylError::Domain("element involves a diagram automorphism".into()));
        }
        Ok(word)
    }

    pub fn length(&self) -> Result<usize, WeylError> {
        Ok(self.reduced_word()?.len())
    }

    pub fn inverse(&self) -> Result<WeylElt, WeylError> {
        let mut action = IntMat::identity(self.action.dim());
        for &i in self.reduced_word()?.iter().rev() {
            action = right_reflect(&action, &self.cartan, i);
        }
        Ok(WeylElt { action, cartan: self.cartan.clone() })
    }

    /// `π⁻¹ ∘ self ∘ π` for a permutation `π` preserving the Cartan matrix.
    pub fn conjugate_by(&self, perm: &[usize]) -> WeylElt {
        let p = IntMat::permutation(perm);
        let pinv = IntMat::permutation(&invert_perm(perm));
        WeylElt { action: pinv.mul(&self.action).mul(&p), cartan: self.cartan.clone() }
    }
}

/// `s_i(d) = d − (α̌_i, d) α_i`.
pub fn simple_reflection(q: &Quiver, i: usize) -> WeylElt {
    WeylElt::from_word(q, &[i])
}

/// `M · s_i`: column `j` becomes `M α_j − a_ij M α_i`.
fn right_reflect(m: &IntMat, a: &[Vec<i64>], i: usize) -> IntMat {
    let n = m.dim();
    let col_i = m.column(i);
    let mut rows: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| m.get(r, c)).collect()).collect();
    for j in 0..n {
        let aij = a[i][j];
        if aij != 0 {
            for (r, row) in rows.iter_mut().enumerate() {
                row[j] = row[j].checked_sub(aij.checked_mul(col_i[r]).expect("overflow")).expect("overflow");
            }
        }
    }
    IntMat::from_rows(&rows)
}

/// Repeatedly strips the smallest right descent. Returns the residual
/// length-zero matrix `R` and a word `w` with `m = R · s_{w_1} ⋯ s_{w_k}`.
fn descend(m: &IntMat, a: &[Vec<i64>]) -> Result<(IntMat, Vec<usize>), WeylError> {
    let n = m.dim();
    let mut cur = m.clone();
    let mut collected = Vec::new();
    while let Some(i) = (0..n).find(|&i| (0..n).any(|r| cur.get(r, i) < 0)) {
        if collected.len() >= MAX_WORD_LENGTH {
            return Err(WeylError::Malformed(MAX_WORD_LENGTH));
        }
        cur = right_reflect(&cur, a, i);
        collected.push(i);
    }
    collected.reverse();
    Ok((cur, collected))
}

pub(crate) fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// A named permutation of the vertices preserving the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub name: String,
    pub perm: Vec<usize>,
}

impl Automorphism {
    pub fn new(q: &Quiver, name: impl Into<String>, perm: Vec<usize>) -> Result<Self, WeylError> {
        let a = q.cartan_matrix();
        let n = q.num_vertices();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        let ok = perm.len() == n
            && sorted == (0..n).collect::<Vec<_>>()
            && (0..n).all(|i| (0..n).all(|j| a[perm[i]][perm[j]] == a[i][j]));
        if !ok {
            return Err(WeylError::NotAutomorphism(perm));
        }
        Ok(Automorphism { name: name.into(), perm })
    }

    pub fn identity(n: usize) -> Self {
        Automorphism { name: "id".into(), perm: (0..n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn matrix(&self) -> IntMat {
        IntMat::permutation(&self.perm)
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { name: format!("{}^-1", self.name), perm: invert_perm(&self.perm) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { name: format!("{}.{}", self.name, other.name), perm: other.perm.iter().map(|&i| self.perm[i]).collect() }
    }
}

/// The rotation `i ↦ i + k mod (n+1)` of the cyclic A_n^(1) quiver.
pub fn a_rotation(q: &Quiver, k: usize) -> Result<Automorphism, WeylError> {
    let n = q.num_vertices();
    let perm: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
    Automorphism::new(q, format!("rot{}", k % n), perm)
}

/// An element `(π, w)` of the extended Weyl group acting by `π ∘ w`.
#[derive(Debug, Clone)]
pub struct ExtWeylElt {
    pub auto: Automorphism,
    pub weyl: WeylElt,
}

impl PartialEq for ExtWeylElt {
    fn eq(&self, o: &Self) -> bool {
        self.auto.perm == o.auto.perm && self.weyl == o.weyl
    }
}

impl Eq for ExtWeylElt {}

impl ExtWeylElt {
    pub fn from_weyl(w: WeylElt) -> Self {
        ExtWeylElt { auto: Automorphism::identity(w.action.dim()), weyl: w }
    }

    pub fn action(&self) -> IntMat {
        self.auto.matrix().mul(&self.weyl.action)
    }

    pub fn apply(&self, d: &DimVector) -> DimVector {
        self.action().apply(d)
    }

    /// `(π,w)(π′,w′) = (ππ′, (π′⁻¹wπ′)w′)`.
    pub fn compose(&self, o: &ExtWeylElt) -> ExtWeylElt {
        ExtWeylElt { auto: self.auto.compose(&o.auto), weyl: self.weyl.conjugate_by(&o.auto.perm).compose(&o.weyl) }
    }

    /// Automorphism letter (if nontrivial) followed by a reduced word of the Weyl part.
    pub fn reduced_word(&self) -> Result<BraidWord, WeylError> {
        let mut word = BraidWord::new();
        if !self.auto.is_identity() {
            word.push(Letter::Auto(self.auto.clone(), 1));
        }
        for i in self.weyl.reduced_word()? {
            word.push(Letter::T(i, 1));
        }
        Ok(word)
    }
}

/// Factors an arbitrary matrix as `(π, w)` with `π` drawn from `autos`.
pub fn reduced_word(q: &Quiver, action: &IntMat, autos: &[Automorphism]) -> Result<ExtWeylElt, WeylError> {
    let a = q.cartan_matrix();
    let (residual, word) = descend(action, &a)?;
    let weyl = WeylElt::from_word(q, &word);
    if residual.is_identity() {
        return Ok(ExtWeylElt::from_weyl(weyl));
    }
    let Some(perm) = residual.as_permutation() else {
        return Err(WeylError::Domain(format!("{action} is not in the extended Weyl group")));
    };
    match autos.iter().find(|x| x.perm == perm) {
        Some(auto) => Ok(ExtWeylElt { auto: auto.clone(), weyl }),
        None => Err(WeylError::FactorizationUnavailable { action: action.clone() }),
    }
}

/// `t_λ(d) = d − (λ, d) δ` as a matrix: column `j` is `α_j − λ_j δ`.
pub fn translation_matrix(aff: &AffineData, lambda: &CoweightVector) -> Result<IntMat, WeylError> {
    if !lambda.is_integral() {
        return Err(WeylError::Domain(format!("coweight {lambda} is not integral")));
    }
    if !lambda.pair(&aff.delta).map_err(|e| WeylError::Domain(e.to_string()))?.is_zero() {
        return Err(WeylError::Domain(format!("coweight {lambda} does not vanish on δ")));
    }
    let n = aff.delta.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let l = lambda.pair_int(&DimVector::simple(n, j));
                    i64::from(i == j) - l * aff.delta[i]
                })
                .collect()
        })
        .collect();
    Ok(IntMat::from_rows(&rows))
}

/// The translation `t_λ`, factored through the supplied automorphisms.
pub fn translation_element(
    q: &Quiver,
    aff: &AffineData,
    lambda: &CoweightVector,
    autos: &[Automorphism],
) -> Result<ExtWeylElt, WeylError> {
    let m = translation_matrix(aff, lambda)?;
    reduced_word(q, &m, autos)
}
