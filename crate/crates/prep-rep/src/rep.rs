use quiver_core::linalg::Mat;
use quiver_core::{BigRational, DimVector, DoubledArrow, Quiver, QuiverError};

use crate::RepError;

/// A representation of `Π_Q`: spaces `ℚ^{d_i}` and a matrix `x_e` of shape
/// `d_{t(e)} × d_{s(e)}` for every arrow `e` of the doubled quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRep {
    quiver: Quiver,
    dim: DimVector,
    maps: Vec<Mat>,
}

impl PiRep {
    /// Checks shapes and the preprojective relation at every vertex.
    pub fn new(quiver: &Quiver, dim: DimVector, maps: Vec<Mat>) -> Result<Self, RepError> {
        let rep = Self::unchecked(quiver, dim, maps)?;
        if let Some(v) = rep.failing_vertex() {
            return Err(RepError::Relation { vertex: v });
        }
        Ok(rep)
    }

    /// Checks shapes only.
    pub(crate) fn unchecked(quiver: &Quiver, dim: DimVector, maps: Vec<Mat>) -> Result<Self, RepError> {
        let n = quiver.num_vertices();
        if dim.len() != n {
            return Err(QuiverError::Dimension { expected: n, got: dim.len() }.into());
        }
        if dim.iter().any(|&d| d < 0) {
            return Err(RepError::Internal(format!("negative dimension vector {dim}")));
        }
        let arrows = quiver.doubled_arrows();
        if maps.len() != arrows.len() {
            return Err(RepError::Internal(format!("expected {} maps, got {}", arrows.len(), maps.len())));
        }
        for (e, m) in arrows.iter().zip(&maps) {
            let expected = (dim[quiver.target(*e)] as usize, dim[quiver.source(*e)] as usize);
            if (m.rows(), m.cols()) != expected {
                return Err(RepError::Shape { arrow: quiver.label(*e), expected, got: (m.rows(), m.cols()) });
            }
        }
        Ok(PiRep { quiver: quiver.clone(), dim, maps })
    }

    /// All maps zero.
    pub fn zero(quiver: &Quiver, dim: DimVector) -> Result<Self, RepError> {
        let maps = quiver
            .doubled_arrows()
            .into_iter()
            .map(|e| Mat::zeros(dim[quiver.target(e)] as usize, dim[quiver.source(e)] as usize))
            .collect();
        Self::new(quiver, dim, maps)
    }

    /// The simple module `σ_i`.
    pub fn simple(quiver: &Quiver, i: usize) -> Result<Self, RepError> {
        if i >= quiver.num_vertices() {
            return Err(RepError::Vertex(i));
        }
        Self::zero(quiver, quiver.simple(i))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.total() as usize
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn map(&self, e: DoubledArrow) -> &Mat {
        &self.maps[self.index(e)]
    }

    pub(crate) fn index(&self, e: DoubledArrow) -> usize {
        if e.star {
            self.quiver.arrows().len() + e.arrow
        } else {
            e.arrow
        }
    }

    /// `Σ_{t(e)=i} ε(e) x_e x_{e*}` on `V_i`.
    pub fn relation_at(&self, i: usize) -> Mat {
        let d = self.dim[i] as usize;
        let mut acc = Mat::zeros(d, d);
        for e in self.quiver.doubled_arrows() {
            if self.quiver.target(e) == i {
                let prod = self.map(e) * self.map(e.dual());
                acc = if e.star { &acc - &prod } else { &acc + &prod };
            }
        }
        acc
    }

    pub(crate) fn failing_vertex(&self) -> Option<usize> {
        (0..self.quiver.num_vertices()).find(|&i| !self.relation_at(i).is_zero())
    }

    /// The chain `V ⊇ MI ⊇ MI² ⊇ ⋯` of images of paths reaches `0` within
    /// `Σ d_i` steps.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.quiver.num_vertices();
        // column bases of the current subspace at each vertex
        let mut sub: Vec<Mat> = (0..n).map(|i| Mat::identity(self.dim[i] as usize)).collect();
        for _ in 0..=self.total_dim() {
            if sub.iter().all(|m| m.cols() == 0) {
                return true;
            }
            let mut next: Vec<Vec<Vec<BigRational>>> = vec![vec![]; n];
            for e in self.quiver.doubled_arrows() {
                let img = self.map(e) * &sub[self.quiver.source(e)];
                for c in 0..img.cols() {
                    next[self.quiver.target(e)].push(img.col(c));
                }
            }
            sub = (0..n).map(|i| column_basis(&next[i], self.dim[i] as usize)).collect();
        }
        false
    }
}

/// A basis (as matrix columns) of the span of `vectors` in `ℚ^d`.
pub(crate) fn column_basis(vectors: &[Vec<BigRational>], d: usize) -> Mat {
    if vectors.is_empty() || d == 0 {
        return Mat::zeros(d, 0);
    }
    let m = Mat::from_rows(vectors.to_vec());
    let (r, pivots) = m.rref();
    let rows: Vec<_> = (0..pivots.len()).map(|k| r.row(k)).collect();
    Mat::from_rows_shape(rows, d).transpose()
}
