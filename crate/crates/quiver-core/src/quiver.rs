use serde::{Deserialize, Serialize};

use crate::{DimVector, QuiverError};

/// An arrow `source -> target` of Ω.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// An arrow of the doubled quiver Ω̄: either `e` or its reverse `e*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubledArrow {
    pub arrow: usize,
    pub star: bool,
}

impl DoubledArrow {
    pub fn new(arrow: usize, star: bool) -> Self {
        DoubledArrow { arrow, star }
    }

    /// `e ↦ e*`; an involution.
    pub fn dual(self) -> Self {
        DoubledArrow { arrow: self.arrow, star: !self.star }
    }

    /// `+1` on Ω, `-1` on the starred half.
    pub fn sign(self) -> i64 {
        if self.star {
            -1
        } else {
            1
        }
    }
}

/// A finite quiver without edge loops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
    kind: Option<String>,
}

impl Quiver {
    /// Builds a quiver from `(source, target)` pairs; arrows get labels `a0, a1, ...`.
    pub fn new(vertices: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let labelled = arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Arrow { source: s, target: t, label: format!("a{k}") })
            .collect();
        Self::with_arrows(vertices, labelled)
    }

    pub fn with_arrows(vertices: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        for (index, a) in arrows.iter().enumerate() {
            for v in [a.source, a.target] {
                if v >= vertices {
                    return Err(QuiverError::VertexOutOfRange { index, vertex: v, count: vertices });
                }
            }
            if a.source == a.target {
                return Err(QuiverError::EdgeLoop { index, vertex: a.source });
            }
        }
        Ok(Quiver { vertices, arrows, kind: None })
    }

    pub fn with_kind(mut self, kind: impl Into<String>) -> Self {
        self.kind = Some(kind.into());
        self
    }

    pub fn kind(&self) -> Option<&str> {
        self.kind.as_deref()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Ω first, then the starred arrows in the same order.
    pub fn doubled_arrows(&self) -> Vec<DoubledArrow> {
        let n = self.arrows.len();
        (0..n)
            .map(|a| DoubledArrow::new(a, false))
            .chain((0..n).map(|a| DoubledArrow::new(a, true)))
            .collect()
    }

    pub fn source(&self, e: DoubledArrow) -> usize {
        let a = &self.arrows[e.arrow];
        if e.star {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(&self, e: DoubledArrow) -> usize {
        let a = &self.arrows[e.arrow];
        if e.star {
            a.source
        } else {
            a.target
        }
    }

    pub fn label(&self, e: DoubledArrow) -> String {
        let l = &self.arrows[e.arrow].label;
        if e.star {
            format!("{l}*")
        } else {
            l.clone()
        }
    }

    /// Arrows of Ω̄ from `i` to `j`.
    pub fn doubled_between(&self, i: usize, j: usize) -> Vec<DoubledArrow> {
        self.doubled_arrows()
            .into_iter()
            .filter(|&e| self.source(e) == i && self.target(e) == j)
            .collect()
    }

    pub fn zero(&self) -> DimVector {
        DimVector::zero(self.vertices)
    }

    pub fn simple(&self, i: usize) -> DimVector {
        DimVector::simple(self.vertices, i)
    }

    fn check(&self, d: &DimVector) -> Result<(), QuiverError> {
        if d.len() != self.vertices {
            return Err(QuiverError::Dimension { expected: self.vertices, got: d.len() });
        }
        Ok(())
    }

    /// ⟨d, e⟩ = Σ d_i e_i − Σ_{a: i→j} d_i e_j.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        self.check(d)?;
        self.check(e)?;
        let diag: i64 = (0..self.vertices).map(|i| d[i] * e[i]).sum();
        let off: i64 = self.arrows.iter().map(|a| d[a.source] * e[a.target]).sum();
        Ok(diag - off)
    }

    /// (d, e) = ⟨d, e⟩ + ⟨e, d⟩.
    pub fn symmetric_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        Ok(self.euler_form(d, e)? + self.euler_form(e, d)?)
    }

    /// Euler form on simple roots, `m[i][j] = ⟨α_i, α_j⟩`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in &self.arrows {
            m[a.source][a.target] -= 1;
        }
        m
    }

    /// The symmetric generalized Cartan matrix `a_ij = (α_i, α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let e = self.euler_matrix();
        let n = self.vertices;
        (0..n).map(|i| (0..n).map(|j| e[i][j] + e[j][i]).collect()).collect()
    }

    /// Full subquiver on `vertices`, renumbered in the given order.
    pub fn subquiver(&self, vertices: &[usize]) -> Quiver {
        let pos = |v: usize| vertices.iter().position(|&w| w == v);
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| match (pos(a.source), pos(a.target)) {
                (Some(s), Some(t)) => Some(Arrow { source: s, target: t, label: a.label.clone() }),
                _ => None,
            })
            .collect();
        Quiver { vertices: vertices.len(), arrows, kind: None }
    }

    /// The finite subquiver on vertices `1..n`.
    pub fn finite_part(&self) -> Quiver {
        let vs: Vec<usize> = (1..self.vertices).collect();
        self.subquiver(&vs)
    }

    // ---- standard families ----

    /// One vertex, no arrows (type A_1).
    pub fn single_vertex() -> Quiver {
        Quiver::new(1, &[]).unwrap().with_kind("A1")
    }

    /// The Kronecker quiver: arrows `x, y: 1 -> 0`; this is A_1^(1).
    pub fn kronecker() -> Quiver {
        let arrows = vec![
            Arrow { source: 1, target: 0, label: "x".into() },
            Arrow { source: 1, target: 0, label: "y".into() },
        ];
        Quiver::with_arrows(2, arrows).unwrap().with_kind("A1~")
    }

    /// Linear A_n: `0 -> 1 -> ... -> n-1`.
    pub fn finite_a(n: usize) -> Quiver {
        let arrows: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Quiver::new(n, &arrows).unwrap().with_kind(format!("A{n}"))
    }

    /// A_n^(1) with the cyclic orientation `0 -> 1 -> ... -> n -> 0`; `n = 1` is the Kronecker quiver.
    pub fn affine_a(n: usize) -> Quiver {
        assert!(n >= 1);
        if n == 1 {
            return Quiver::kronecker();
        }
        let arrows: Vec<_> = (0..=n).map(|i| (i, (i + 1) % (n + 1))).collect();
        Quiver::new(n + 1, &arrows).unwrap().with_kind(format!("A{n}~"))
    }

    /// D_n^(1), `n >= 4`, with arrows pointing away from the affine vertex along the spine.
    pub fn affine_d(n: usize) -> Quiver {
        assert!(n >= 4);
        // vertices 0..=n; spine 2..=n-2; leaves 0,1 at 2 and n-1,n at n-2
        let mut arrows = vec![(0, 2), (1, 2)];
        for i in 2..n - 2 {
            arrows.push((i, i + 1));
        }
        arrows.push((n - 2, n - 1));
        arrows.push((n - 2, n));
        Quiver::new(n + 1, &arrows).unwrap().with_kind(format!("D{n}~"))
    }

    /// E_6^(1), E_7^(1), E_8^(1) with vertex 0 at the end of the longest arm.
    pub fn affine_e(n: usize) -> Quiver {
        let arrows: Vec<(usize, usize)> = match n {
            // arms 2,2,2 around vertex 3
            6 => vec![(1, 2), (2, 3), (5, 4), (4, 3), (0, 6), (6, 3)],
            // arms 3,3,1 around vertex 3
            7 => vec![(0, 1), (1, 2), (2, 3), (6, 5), (5, 4), (4, 3), (7, 3)],
            // arms 5,2,1 around vertex 5
            8 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (7, 6), (6, 5), (8, 5)],
            _ => panic!("E_{n}^(1) does not exist"),
        };
        Quiver::new(n + 1, &arrows).unwrap().with_kind(format!("E{n}~"))
    }
}
