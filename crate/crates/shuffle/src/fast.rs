//! Packed integer polynomials for the inner loop of the shuffle product.
//!
//! Up to 16 variables, exponents below 256 (one byte each in a `u128` key) and `i128`
//! coefficients. Every operation reports overflow as `None` so callers can fall back to
//! [`Poly`].

use num_traits::{ToPrimitive, Zero};
use quiver_core::{BigInt, BigRational};
use rustc_hash::FxHashMap;

use crate::poly::{Mono, Poly, VarId};

pub(crate) const SLOTS: usize = 16;
type Key = u128;

pub(crate) struct Layout {
    vars: Vec<VarId>,
    index: FxHashMap<VarId, usize>,
}

impl Layout {
    pub(crate) fn new(vars: impl IntoIterator<Item = VarId>) -> Option<Layout> {
        let mut vars: Vec<VarId> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() > SLOTS {
            return None;
        }
        let index = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        Some(Layout { vars, index })
    }

    pub(crate) fn slot(&self, v: VarId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    fn encode(&self, m: &Mono) -> Option<Key> {
        let mut k: Key = 0;
        for &(v, e) in m {
            if e > 255 {
                return None;
            }
            k |= (e as Key) << (8 * self.slot(v)?);
        }
        Some(k)
    }

    fn decode(&self, k: Key) -> Mono {
        (0..self.vars.len())
            .filter_map(|s| {
                let e = ((k >> (8 * s)) & 0xff) as u32;
                (e > 0).then_some((self.vars[s], e))
            })
            .collect()
    }
}

#[derive(Clone, Default)]
pub(crate) struct IPoly {
    terms: FxHashMap<Key, i128>,
}

impl IPoly {
    /// `scale · p`, which must have integral coefficients fitting in `i128`.
    pub(crate) fn from_poly(p: &Poly, layout: &Layout, scale: &BigInt) -> Option<IPoly> {
        let mut terms = FxHashMap::default();
        for (m, c) in p.terms() {
            let c = c * BigRational::from_integer(scale.clone());
            if !c.is_integer() {
                return None;
            }
            terms.insert(layout.encode(m)?, c.to_integer().to_i128()?);
        }
        Some(IPoly { terms })
    }

    pub(crate) fn to_poly(&self, layout: &Layout) -> Poly {
        let mut p = Poly::zero();
        for (&k, &c) in &self.terms {
            p.add_term(layout.decode(k), BigRational::from_integer(c.into()));
        }
        p
    }

    pub(crate) fn mul(&self, o: &IPoly) -> Option<IPoly> {
        let mut terms: FxHashMap<Key, i128> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * o.terms.len().min(8), Default::default());
        for (&k1, &c1) in &self.terms {
            for (&k2, &c2) in &o.terms {
                let c = c1.checked_mul(c2)?;
                let e = terms.entry(k1 + k2).or_insert(0);
                *e = e.checked_add(c)?;
            }
        }
        terms.retain(|_, c| *c != 0);
        Some(IPoly { terms })
    }

    pub(crate) fn add_assign(&mut self, o: &IPoly) -> Option<()> {
        for (&k, &c) in &o.terms {
            let e = self.terms.entry(k).or_insert(0);
            *e = e.checked_add(c)?;
        }
        self.terms.retain(|_, c| *c != 0);
        Some(())
    }

    pub(crate) fn neg(&mut self) -> Option<()> {
        for c in self.terms.values_mut() {
            *c = c.checked_neg()?;
        }
        Some(())
    }

    /// Exact division by `x_a - x_b`: `Some(Err(()))` when a remainder is left.
    pub(crate) fn div_linear(&self, a: usize, b: usize) -> Option<Result<IPoly, ()>> {
        let (sa, sb) = (8 * a, 8 * b);
        let mask: Key = 0xff << sa;
        let top = self.terms.keys().map(|k| ((k & mask) >> sa) as usize).max().unwrap_or(0);
        let mut buckets: Vec<FxHashMap<Key, i128>> = vec![FxHashMap::default(); top + 1];
        for (&k, &c) in &self.terms {
            buckets[((k & mask) >> sa) as usize].insert(k & !mask, c);
        }
        let mut q = FxHashMap::default();
        for e in (1..=top).rev() {
            let bucket = std::mem::take(&mut buckets[e]);
            for (m, c) in bucket {
                if c == 0 {
                    continue;
                }
                q.insert(m | ((e as Key - 1) << sa), c);
                let slot = buckets[e - 1].entry(m + (1 << sb)).or_insert(0);
                *slot = slot.checked_add(c)?;
            }
        }
        if buckets[0].values().any(|c| !c.is_zero()) {
            return Some(Err(()));
        }
        Some(Ok(IPoly { terms: q }))
    }
}
