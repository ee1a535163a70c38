use std::fmt;
use std::str::FromStr;

use num_traits::One;
use quiver_core::linalg::Mat;
use quiver_core::DoubledArrow;

use crate::{PiRep, RepError};

/// `S_i` (kernel form) or `S_i′` (cokernel form).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    S,
    SPrime,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::S => "S",
            Direction::SPrime => "S'",
        })
    }
}

impl FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "S" | "s" => Ok(Direction::S),
            "S'" | "s'" | "Sprime" | "sprime" => Ok(Direction::SPrime),
            _ => Err(format!("unknown direction `{s}` (expected S or S')")),
        }
    }
}

/// Membership in `T^{s_i}` (`⁽ⁱ⁾x` surjective) and `F_{s_i}` (`x⁽ⁱ⁾` injective).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionFlags {
    pub in_t: bool,
    pub in_f: bool,
}

/// The arrows into `i` and the offsets of their sources in `Ṽ_i`.
fn incoming(m: &PiRep, i: usize) -> (Vec<(DoubledArrow, usize)>, usize) {
    let q = m.quiver();
    let mut out = vec![];
    let mut off = 0;
    for e in q.doubled_arrows() {
        if q.target(e) == i {
            out.push((e, off));
            off += m.dim()[q.source(e)] as usize;
        }
    }
    (out, off)
}

/// `⁽ⁱ⁾x = ⊕ ε(e) x_e : Ṽ_i → V_i` and `x⁽ⁱ⁾ = ⊕ x_{e*} : V_i → Ṽ_i`.
fn star_maps(m: &PiRep, i: usize) -> (Mat, Mat) {
    let (inc, total) = incoming(m, i);
    let d = m.dim()[i] as usize;
    let mut into = Mat::zeros(d, total);
    let mut out = Mat::zeros(total, d);
    for (e, off) in inc {
        let x = m.map(e);
        let xs = m.map(e.dual());
        for r in 0..d {
            for c in 0..x.cols() {
                into[(r, off + c)] = if e.star { -x[(r, c)].clone() } else { x[(r, c)].clone() };
            }
        }
        for r in 0..xs.rows() {
            for c in 0..d {
                out[(off + r, c)] = xs[(r, c)].clone();
            }
        }
    }
    (into, out)
}

pub fn torsion_membership(m: &PiRep, i: usize) -> Result<TorsionFlags, RepError> {
    if i >= m.quiver().num_vertices() {
        return Err(RepError::Vertex(i));
    }
    let (into, out) = star_maps(m, i);
    let d = m.dim()[i] as usize;
    Ok(TorsionFlags { in_t: into.rank() == d, in_f: out.rank() == d })
}

/// Free columns of `a`: the coordinates in which the kernel basis of
/// [`Mat::nullspace`] is the identity.
fn free_columns(a: &Mat) -> Vec<usize> {
    let (_, pivots) = a.rref();
    (0..a.cols()).filter(|c| !pivots.contains(c)).collect()
}

/// `S_i` replaces `V_i` by `ker ⁽ⁱ⁾x` with maps `x⁽ⁱ⁾∘⁽ⁱ⁾x` in and the
/// inclusion out; `S_i′` replaces it by `coker x⁽ⁱ⁾` with the projection in
/// and the map induced by `x⁽ⁱ⁾∘⁽ⁱ⁾x` out.
pub fn reflect(i: usize, m: &PiRep, dir: Direction) -> Result<PiRep, RepError> {
    let q = m.quiver();
    if i >= q.num_vertices() {
        return Err(RepError::Vertex(i));
    }
    let (into, out) = star_maps(m, i);
    let c = &out * &into;
    let (new_into, new_out) = match dir {
        Direction::S => {
            let k = into.kernel_matrix();
            let free = free_columns(&into);
            let rows: Vec<_> = free.iter().map(|&f| c.row(f)).collect();
            (Mat::from_rows_shape(rows, c.cols()), k)
        }
        Direction::SPrime => {
            let p = out.left_kernel_matrix();
            let free = free_columns(&out.transpose());
            let mut r = Mat::zeros(out.rows(), free.len());
            for (k, &f) in free.iter().enumerate() {
                r[(f, k)] = One::one();
            }
            (p, &c * &r)
        }
    };
    let d_new = new_into.rows();
    let mut dim = m.dim().clone();
    dim[i] = d_new as i64;
    let mut maps = m.maps().to_vec();
    let (inc, _) = incoming(m, i);
    for (e, off) in inc {
        let w = m.dim()[q.source(e)] as usize;
        let mut x = new_into.block(0, d_new, off, off + w);
        if e.star {
            x = -&x;
        }
        maps[m.index(e)] = x;
        maps[m.index(e.dual())] = new_out.block(off, off + w, 0, d_new);
    }
    let rep = PiRep::unchecked(q, dim, maps)?;
    if let Some(v) = rep.failing_vertex() {
        return Err(RepError::Internal(format!("reflection at {i} broke the relation at vertex {v}")));
    }
    Ok(rep)
}
