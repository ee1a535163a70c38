use std::collections::HashMap;

use quiver_core::{finite_positive_roots, DimVector, Quiver};

use crate::LoopError;

/// An element of the finite Lie algebra basis: a root vector `E_α` (by index
/// into [`RootSystemF::roots`]) or a simple coroot `h_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteBasis {
    Root(usize),
    Cartan(usize),
}

/// Result of a bracket of two finite basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteBracket {
    Zero,
    Root(i64, usize),
    /// `Σ c_i h_i`
    Cartan(Vec<i64>),
}

/// The simple Lie algebra of a finite ADE quiver with a Frenkel–Kac basis.
///
/// Structure constants come from the bicharacter `ε(α,β) = (−1)^⟨α,β⟩` of the
/// quiver's Euler form, which gives `[e_α, e_β] = ε(α,β) e_{α+β}` and
/// `[e_α, e_{−α}] = −h_α`. The exposed basis is `E_α = e_α` for positive `α`
/// and `E_{−α} = −e_{−α}`, so that `[E_α, E_{−α}] = h_α` for every root and
/// `(E_α, E_{−α}) = 1` for the invariant form with `(h_i, h_j) = a_ij`.
#[derive(Debug, Clone)]
pub struct RootSystemF {
    quiver: Quiver,
    cartan: Vec<Vec<i64>>,
    roots: Vec<DimVector>,
    positive: usize,
    index: HashMap<DimVector, usize>,
    highest: usize,
}

impl RootSystemF {
    pub fn new(qf: &Quiver) -> Result<Self, LoopError> {
        if qf.num_vertices() == 0 {
            return Err(LoopError::Type("empty quiver".into()));
        }
        let mut pos = finite_positive_roots(qf).map_err(|e| LoopError::Type(e.to_string()))?;
        pos.sort_by_key(|r| (r.total(), r.clone()));
        let positive = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| -r));
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Ok(RootSystemF { quiver: qf.clone(), cartan: qf.cartan_matrix(), roots, positive, index, highest: positive - 1 })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots first (by height), then their negatives in the same order.
    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive
    }

    pub fn root(&self, k: usize) -> &DimVector {
        &self.roots[k]
    }

    pub fn root_index(&self, r: &DimVector) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.positive
    }

    pub fn negate(&self, k: usize) -> usize {
        if k < self.positive {
            k + self.positive
        } else {
            k - self.positive
        }
    }

    pub fn simple(&self, i: usize) -> usize {
        self.root_index(&DimVector::simple(self.rank(), i)).expect("simple roots are roots")
    }

    /// Index of the highest root φ.
    pub fn highest_root(&self) -> usize {
        self.highest
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn basis(&self) -> Vec<FiniteBasis> {
        (0..self.roots.len()).map(FiniteBasis::Root).chain((0..self.rank()).map(FiniteBasis::Cartan)).collect()
    }

    /// `ε(α,β) = (−1)^⟨α,β⟩`.
    pub fn epsilon(&self, a: &DimVector, b: &DimVector) -> i64 {
        if self.quiver.euler_form(a, b).expect("rank checked").rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(α, β)` for the symmetrized form.
    pub fn pairing(&self, a: &DimVector, b: &DimVector) -> i64 {
        self.quiver.symmetric_form(a, b).expect("rank checked")
    }

    fn sign(&self, r: &DimVector) -> i64 {
        if r.is_nonneg() {
            1
        } else {
            -1
        }
    }

    pub fn bracket(&self, x: FiniteBasis, y: FiniteBasis) -> FiniteBracket {
        use FiniteBasis::*;
        match (x, y) {
            (Cartan(_), Cartan(_)) => FiniteBracket::Zero,
            (Cartan(i), Root(b)) => {
                let c = self.pairing(&DimVector::simple(self.rank(), i), &self.roots[b]);
                if c == 0 {
                    FiniteBracket::Zero
                } else {
                    FiniteBracket::Root(c, b)
                }
            }
            (Root(_), Cartan(_)) => match self.bracket(y, x) {
                FiniteBracket::Root(c, b) => FiniteBracket::Root(-c, b),
                other => other,
            },
            (Root(a), Root(b)) => {
                let (ra, rb) = (&self.roots[a], &self.roots[b]);
                let sum = ra + rb;
                if sum.is_zero() {
                    return FiniteBracket::Cartan(ra.0.clone());
                }
                match self.root_index(&sum) {
                    Some(k) => {
                        let c = self.sign(ra) * self.sign(rb) * self.sign(&sum) * self.epsilon(ra, rb);
                        FiniteBracket::Root(c, k)
                    }
                    None => FiniteBracket::Zero,
                }
            }
        }
    }

    /// The invariant form with `(h_i, h_j) = a_ij` and `(E_α, E_{−α}) = 1`.
    pub fn form(&self, x: FiniteBasis, y: FiniteBasis) -> i64 {
        use FiniteBasis::*;
        match (x, y) {
            (Cartan(i), Cartan(j)) => self.cartan[i][j],
            (Root(a), Root(b)) if self.negate(a) == b => 1,
            _ => 0,
        }
    }

    /// Label of a root vector such as `e[1,-1]` or a Cartan element `h[2]`.
    pub fn label(&self, x: FiniteBasis) -> String {
        match x {
            FiniteBasis::Root(k) => {
                let parts: Vec<String> = self.roots[k].iter().map(|c| c.to_string()).collect();
                format!("e[{}]", parts.join(","))
            }
            FiniteBasis::Cartan(i) => format!("h[{}]", i + 1),
        }
    }
}
