#![allow(dead_code)]

use loop_env::{FiniteBasis, LieEltLoop, LoopAlgebra, Sym};

/// Non-central basis symbols with `|s| ≤ smax` and `t ≤ tmax`.
pub fn basis(alg: &LoopAlgebra, smax: i64, tmax: u32) -> Vec<Sym> {
    let rs = alg.root_system();
    let mut out = vec![];
    for s in -smax..=smax {
        for t in 0..=tmax {
            out.extend(rs.basis().into_iter().map(|x| Sym::X { x, s, t }));
        }
    }
    out
}

pub fn root_vectors(alg: &LoopAlgebra, smax: i64) -> Vec<Sym> {
    basis(alg, smax, 0).into_iter().filter(|s| matches!(s, Sym::X { x: FiniteBasis::Root(_), .. })).collect()
}

pub fn elt(s: &Sym) -> LieEltLoop {
    LieEltLoop::basis(s.clone())
}
