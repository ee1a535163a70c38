use num_traits::Zero;
use quiver_core::linalg::Mat;
use quiver_core::{qi, BigRational, DimVector, Quiver};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{PiRep, RepError};

fn small(rng: &mut impl Rng) -> BigRational {
    // zero half of the time keeps the modules decomposable often enough
    if rng.gen_bool(0.5) {
        BigRational::zero()
    } else {
        qi(*[-2, -1, 1, 2].choose(rng).expect("nonempty"))
    }
}

/// Solves the relation for the starred maps given the Ω maps; `allowed(e, r, c)`
/// restricts which entries of `x_{e*}` may be nonzero.
fn complete(
    q: &Quiver,
    dim: &DimVector,
    omega: Vec<Mat>,
    allowed: impl Fn(usize, usize, usize) -> bool,
    rng: &mut impl Rng,
) -> Result<PiRep, RepError> {
    let arrows = q.arrows();
    // unknowns: allowed entries of x_{e*} : V_{t(e)} → V_{s(e)}
    let mut vars = vec![];
    for (k, a) in arrows.iter().enumerate() {
        for r in 0..dim[a.source] as usize {
            for c in 0..dim[a.target] as usize {
                if allowed(k, r, c) {
                    vars.push((k, r, c));
                }
            }
        }
    }
    // relation at i: Σ_{t(e)=i, e∈Ω} x_e x_{e*} − Σ_{s(e)=i, e∈Ω} x_{e*} x_e = 0, linear in x_{e*}
    let mut rows = vec![];
    for i in 0..q.num_vertices() {
        let d = dim[i] as usize;
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![BigRational::zero(); vars.len()];
                for (v, &(k, vr, vc)) in vars.iter().enumerate() {
                    let a = &arrows[k];
                    let x = &omega[k];
                    if a.target == i && vc == c {
                        // (x_e x_{e*})[r][c] gets x_e[r][vr]
                        row[v] += &x[(r, vr)];
                    }
                    if a.source == i && vr == r {
                        // (x_{e*} x_e)[r][c] gets x_e[vc][c]
                        row[v] -= &x[(vc, c)];
                    }
                }
                rows.push(row);
            }
        }
    }
    let sol = if vars.is_empty() {
        vec![]
    } else if rows.is_empty() {
        (0..vars.len()).map(|_| small(rng)).collect()
    } else {
        let basis = Mat::from_rows_shape(rows, vars.len()).nullspace();
        let mut s = vec![BigRational::zero(); vars.len()];
        for b in basis {
            let c = small(rng);
            for (x, y) in s.iter_mut().zip(&b) {
                *x += &c * y;
            }
        }
        s
    };
    let mut star: Vec<Mat> = arrows.iter().map(|a| Mat::zeros(dim[a.source] as usize, dim[a.target] as usize)).collect();
    for ((k, r, c), v) in vars.into_iter().zip(sol) {
        star[k][(r, c)] = v;
    }
    PiRep::new(q, dim.clone(), omega.into_iter().chain(star).collect())
}

/// A random representation: random Ω maps, starred maps a random solution of
/// the (linear in them) preprojective relation. Usually not nilpotent.
pub fn random_preprojective(q: &Quiver, dim: &DimVector, rng: &mut impl Rng) -> Result<PiRep, RepError> {
    let omega: Vec<Mat> = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dim[a.target] as usize, dim[a.source] as usize);
            let rows = (0..r).map(|_| (0..c).map(|_| small(rng)).collect()).collect();
            Mat::from_rows_shape(rows, c)
        })
        .collect();
    complete(q, dim, omega, |_, _, _| true, rng)
}

/// A random nilpotent representation: basis vectors get distinct levels and
/// every map only raises the level, so paths longer than `Σ d_i` vanish.
pub fn random_nilpotent(q: &Quiver, dim: &DimVector, rng: &mut impl Rng) -> Result<PiRep, RepError> {
    let n = q.num_vertices();
    let total = dim.total() as usize;
    let mut levels: Vec<usize> = (0..total).collect();
    levels.shuffle(rng);
    let mut level = vec![vec![]; n];
    let mut it = levels.into_iter();
    for i in 0..n {
        level[i] = (0..dim[i] as usize).map(|_| it.next().expect("enough levels")).collect::<Vec<usize>>();
    }
    let omega: Vec<Mat> = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dim[a.target] as usize, dim[a.source] as usize);
            let rows = (0..r)
                .map(|x| (0..c).map(|y| if level[a.target][x] > level[a.source][y] { small(rng) } else { BigRational::zero() }).collect())
                .collect();
            Mat::from_rows_shape(rows, c)
        })
        .collect();
    let arrows = q.arrows().to_vec();
    complete(q, dim, omega, |k, r, c| level[arrows[k].source][r] > level[arrows[k].target][c], rng)
}
