use num_traits::Zero;
use quiver_core::linalg::Mat;
use quiver_core::{qi, BigRational};
use rand::Rng;

use crate::PiRep;

/// Largest total dimension for which [`isomorphism`] searches.
pub const MAX_ISO_DIM: usize = 6;

const ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    /// Invertible `g_i` with `g_{t(e)} a_e = b_e g_{s(e)}` for every arrow.
    Isomorphic(Vec<Mat>),
    /// Different dimension vectors or different `Hom`/`End` dimensions.
    NotIsomorphic,
    Undecided,
}

/// A basis of `Hom(a, b)`, each element given by its vertex matrices.
pub fn hom_space(a: &PiRep, b: &PiRep) -> Vec<Vec<Mat>> {
    let q = a.quiver();
    let n = q.num_vertices();
    let (da, db) = (a.dim(), b.dim());
    // unknown g_i (db_i × da_i), row-major, vertex blocks in order
    let mut offsets = vec![0usize; n + 1];
    for i in 0..n {
        offsets[i + 1] = offsets[i] + (db[i] * da[i]) as usize;
    }
    let unknowns = offsets[n];
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * da[i] as usize + c;
    let mut rows: Vec<Vec<BigRational>> = vec![];
    for e in q.doubled_arrows() {
        let (s, t) = (q.source(e), q.target(e));
        let (ae, be) = (a.map(e), b.map(e));
        // (g_t a_e − b_e g_s)[r][c] = 0
        for r in 0..db[t] as usize {
            for c in 0..da[s] as usize {
                let mut row = vec![BigRational::zero(); unknowns];
                for k in 0..da[t] as usize {
                    row[var(t, r, k)] += &ae[(k, c)];
                }
                for k in 0..db[s] as usize {
                    row[var(s, k, c)] -= &be[(r, k)];
                }
                rows.push(row);
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns)
            .map(|u| {
                let mut v = vec![BigRational::zero(); unknowns];
                v[u] = qi(1);
                v
            })
            .collect()
    } else {
        Mat::from_rows_shape(rows, unknowns).nullspace()
    };
    basis
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|i| {
                    let (r, c) = (db[i] as usize, da[i] as usize);
                    let vals: Vec<Vec<BigRational>> = (0..r).map(|x| (0..c).map(|y| v[var(i, x, y)].clone()).collect()).collect();
                    Mat::from_rows_shape(vals, c)
                })
                .collect()
        })
        .collect()
}

/// Searches `Hom(a, b)` for an invertible element at random integer points.
/// A hit is an exact certificate; so is a mismatch of `dim Hom(a, b)` with
/// `dim End(a)`. Otherwise, and above [`MAX_ISO_DIM`], the answer is undecided.
pub fn isomorphism(a: &PiRep, b: &PiRep, rng: &mut impl Rng) -> IsoResult {
    if a.quiver() != b.quiver() || a.dim() != b.dim() {
        return IsoResult::NotIsomorphic;
    }
    if a.total_dim() > MAX_ISO_DIM {
        return IsoResult::Undecided;
    }
    let hom = hom_space(a, b);
    if hom.len() != hom_space(a, a).len() || hom.len() != hom_space(b, b).len() {
        return IsoResult::NotIsomorphic;
    }
    if hom.is_empty() {
        return if a.total_dim() == 0 { IsoResult::Isomorphic(vec![]) } else { IsoResult::NotIsomorphic };
    }
    let n = a.quiver().num_vertices();
    for _ in 0..ATTEMPTS {
        let coeffs: Vec<BigRational> = hom.iter().map(|_| qi(rng.gen_range(-50..=50))).collect();
        let g: Vec<Mat> = (0..n)
            .map(|i| {
                hom.iter().zip(&coeffs).fold(Mat::zeros(b.dim()[i] as usize, a.dim()[i] as usize), |acc, (h, c)| {
                    &acc + &h[i].scale(c)
                })
            })
            .collect();
        if g.iter().all(|m| m.rows() == 0 || !m.determinant().is_zero()) {
            return IsoResult::Isomorphic(g);
        }
    }
    IsoResult::Undecided
}
