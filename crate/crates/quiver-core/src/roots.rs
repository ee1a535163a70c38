use std::collections::{BTreeSet, VecDeque};

use crate::{DimVector, Quiver, QuiverError};

/// Positive real roots of height `<= max_height`, sorted by (height, lex).
///
/// Every positive real root other than a simple one has a simple reflection
/// lowering its height, so a breadth-first search upward from the simple roots
/// reaches each root without leaving the height bound.
pub fn positive_real_roots(q: &Quiver, max_height: i64) -> Vec<DimVector> {
    let n = q.num_vertices();
    let a = q.cartan_matrix();
    let mut seen: BTreeSet<DimVector> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let s = q.simple(i);
        if max_height >= 1 {
            seen.insert(s.clone());
            queue.push_back(s);
        }
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let pair: i64 = (0..n).map(|j| a[i][j] * b[j]).sum();
            if pair < 0 {
                let mut c = b.clone();
                c[i] -= pair;
                if c.total() <= max_height && seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|d| (d.total(), d.clone()));
    out
}

/// Positive roots of a finite-type quiver.
pub fn finite_positive_roots(q: &Quiver) -> Result<Vec<DimVector>, QuiverError> {
    let n = q.num_vertices() as i64;
    // the highest root of a rank-n simply-laced system has height < 2n + 30
    let bound = 2 * n + 30;
    let roots = positive_real_roots(q, bound + 1);
    if roots.iter().any(|r| r.total() > bound) {
        return Err(QuiverError::NotFinite("root system is infinite".into()));
    }
    Ok(roots)
}

/// Positive roots (real and imaginary) of an affine quiver up to `max_height`,
/// from the real-root search plus the multiples of `delta`.
pub fn positive_roots_bfs(q: &Quiver, delta: &DimVector, max_height: i64) -> Vec<DimVector> {
    let mut all: BTreeSet<DimVector> = positive_real_roots(q, max_height).into_iter().collect();
    let mut k = 1;
    while delta.total() * k <= max_height {
        all.insert(delta.scale(k));
        k += 1;
    }
    let mut out: Vec<_> = all.into_iter().collect();
    out.sort_by_key(|d| (d.total(), d.clone()));
    out
}
