use std::collections::BTreeMap;

use quiver_core::{BigInt, DimVector};
use series::TruncationWindow;

use crate::lie::{LoopAlgebra, Sym};
use crate::rootsys::FiniteBasis;

/// Basis symbols of `n_ell` whose degree `d = −weight` lies in the window's
/// weight bounds, with `t`-degree at most `max_qdeg`.
pub fn n_ell_basis(alg: &LoopAlgebra, window: &TruncationWindow) -> Vec<Sym> {
    let rs = alg.root_system();
    let max_t = window.max_qdeg as u32;
    let delta_total = alg.affine().delta.total();
    let max_s = window.max_total / delta_total + 1;
    let mut out = vec![];
    for s in -max_s..=0 {
        for t in 0..=max_t {
            let mut cands: Vec<Sym> = (0..rs.roots().len()).map(|k| Sym::X { x: FiniteBasis::Root(k), s, t }).collect();
            cands.extend((0..rs.rank()).map(|i| Sym::X { x: FiniteBasis::Cartan(i), s, t }));
            if s < 0 && t >= 1 {
                cands.push(Sym::CK { k: s, l: t });
            }
            for c in cands {
                if !alg.is_negative(&c) {
                    continue;
                }
                let d = -alg.weight(&c);
                if d.le(&window.max_weight) && d.total() <= window.max_total {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Number of PBW monomials of `U(n_ell)` at each `(d, t-degree)` in the window,
/// counted as multisets of [`n_ell_basis`] elements.
pub fn pbw_counts(alg: &LoopAlgebra, window: &TruncationWindow) -> BTreeMap<(DimVector, i64), BigInt> {
    let basis = n_ell_basis(alg, window);
    let n = alg.vertices();
    let zero = (DimVector::zero(n), 0i64);
    let mut counts: BTreeMap<(DimVector, i64), BigInt> = BTreeMap::new();
    counts.insert(zero, BigInt::from(1));
    for b in &basis {
        let d = -alg.weight(b);
        let t = i64::from(b.t_degree());
        // unbounded knapsack: visit states in increasing order so one item may repeat
        let mut states: Vec<(DimVector, i64)> = window
            .weights()
            .into_iter()
            .flat_map(|w| (0..=window.max_qdeg).map(move |k| (w.clone(), k)))
            .collect();
        states.sort_by_key(|(w, k)| (w.total(), *k, w.clone()));
        for (w, k) in states {
            let (pw, pk) = (&w - &d, k - t);
            if pk < 0 || !pw.is_nonneg() {
                continue;
            }
            if let Some(c) = counts.get(&(pw, pk)).cloned() {
                *counts.entry((w, k)).or_default() += c;
            }
        }
    }
    counts
}
