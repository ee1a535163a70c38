//! Sign twists of the shuffle product.

use num_traits::One;
use quiver_core::{find_delta, BigRational, DimVector, Quiver};

use crate::{ShuffleAlgebra, ShuffleElt, ShuffleError};

/// A bilinear form `Θ: ℤI × ℤI → ℤ/2` with `Θ(d,e) + Θ(e,d) = (d,e)` mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistForm {
    matrix: Vec<Vec<u8>>,
}

fn mod2(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

impl TwistForm {
    /// Validates the symmetrization condition against the Cartan matrix of `q`.
    pub fn new(q: &Quiver, matrix: &[Vec<i64>]) -> Result<Self, ShuffleError> {
        let n = q.num_vertices();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(ShuffleError::Domain(format!("twist form must be {n}x{n}")));
        }
        let cartan = q.cartan_matrix();
        for i in 0..n {
            for j in 0..n {
                if mod2(matrix[i][j] + matrix[j][i] - cartan[i][j]) != 0 {
                    return Err(ShuffleError::Domain(format!(
                        "Θ({i},{j}) + Θ({j},{i}) is not congruent to the Cartan entry {}",
                        cartan[i][j]
                    )));
                }
            }
        }
        Ok(TwistForm { matrix: matrix.iter().map(|r| r.iter().map(|&x| mod2(x)).collect()).collect() })
    }

    /// The Euler form of `q`; twisting by it gives the plain shuffle product.
    pub fn euler(q: &Quiver) -> Self {
        Self::new(q, &q.euler_matrix()).expect("the Euler form symmetrizes to the Cartan form")
    }

    /// For an affine quiver: `Θ(α_i, α_j) = ⟨α_i, α_j⟩` on the finite part and `δ` in the
    /// kernel, written in the vertex basis via `α_0 = δ - φ`.
    pub fn ade(q: &Quiver) -> Result<Self, ShuffleError> {
        let aff = find_delta(q)?;
        let n = q.num_vertices();
        let fin = q.finite_part().euler_matrix();
        // finite coordinates of each vertex: α_0 ↦ -φ, α_i ↦ α_i
        let coords: Vec<Vec<i64>> = (0..n)
            .map(|v| {
                (1..n)
                    .map(|k| if v == 0 { -aff.delta[k] } else if v == k { 1 } else { 0 })
                    .collect()
            })
            .collect();
        let m: Vec<Vec<i64>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut s = 0;
                        for (x, ca) in coords[a].iter().enumerate() {
                            for (y, cb) in coords[b].iter().enumerate() {
                                s += ca * fin[x][y] * cb;
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Self::new(q, &m)
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    /// `Θ(d, e)` mod 2.
    pub fn value(&self, d: &DimVector, e: &DimVector) -> u8 {
        let mut s = 0u64;
        for (i, di) in d.iter().enumerate() {
            for (j, ej) in e.iter().enumerate() {
                s += (di.rem_euclid(2) * ej.rem_euclid(2)) as u64 * self.matrix[i][j] as u64;
            }
        }
        (s % 2) as u8
    }

    /// `Θ - ω`, required to be alternating mod 2.
    fn difference(&self, omega: &TwistForm) -> Result<Vec<Vec<u8>>, ShuffleError> {
        let n = self.matrix.len();
        if omega.matrix.len() != n {
            return Err(ShuffleError::Domain("twist forms of different rank".into()));
        }
        let d: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| self.matrix[i][j] ^ omega.matrix[i][j]).collect()).collect();
        for i in 0..n {
            if d[i][i] != 0 {
                return Err(ShuffleError::Domain(format!("Θ - ω is not alternating at vertex {i}")));
            }
            for j in 0..i {
                if d[i][j] != d[j][i] {
                    return Err(ShuffleError::Domain(format!("Θ - ω is not antisymmetric at ({i},{j})")));
                }
            }
        }
        Ok(d)
    }
}

/// `P ⋆_Θ Q = (-1)^{Θ(|P|,|Q|)}` times the unsigned symmetrization; `Θ = ⟨-,-⟩` gives `P ⋆ Q`.
pub fn twist(alg: &ShuffleAlgebra, theta: &TwistForm, p: &ShuffleElt, q: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
    let out = alg.unsigned_mul(p, q)?;
    Ok(if theta.value(p.weight(), q.weight()) == 1 { out.scale(&-BigRational::one()) } else { out })
}

/// The isomorphism `(Sh, ⋆_ω) → (Sh, ⋆_Θ)`, `P ↦ u_{|P|} P` with
/// `u_γ = (-1)^{Σ_{i<j} γ_i γ_j (Θ-ω)(α_i, α_j)}`.
pub fn twist_iso(theta: &TwistForm, omega: &TwistForm, p: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
    let diff = theta.difference(omega)?;
    let g = p.weight();
    if g.len() != diff.len() {
        return Err(ShuffleError::Domain("weight does not match the twist form".into()));
    }
    let mut s = 0i64;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            s += (g[i] * g[j]).rem_euclid(2) * diff[i][j] as i64;
        }
    }
    Ok(if s % 2 == 1 { p.scale(&-BigRational::one()) } else { p.clone() })
}
