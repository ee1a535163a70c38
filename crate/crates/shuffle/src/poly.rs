//! Sparse multivariate polynomials over ℚ.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use quiver_core::BigRational;

/// Variable ids are partitioned into ranges; see [`Var`].
pub type VarId = u32;

/// A monomial: `(variable, exponent)` pairs sorted by variable, exponents positive.
pub type Mono = Vec<(VarId, u32)>;

/// The variables of the coefficient ring and of shuffle elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Hbar,
    /// `ε_e` for the arrow `e ∈ Ω` with this index.
    Eps(usize),
    /// Two-parameter specialization targets `ε_1`, `ε_2`.
    Eps1,
    Eps2,
    /// Formal series variables `u, v, w, ...` of generating-series relations.
    Series(usize),
    /// `z_{i,k}` with `k` counted from zero.
    Z(usize, usize),
}

const EPS_BASE: VarId = 1;
const EPS1_ID: VarId = 1000;
const EPS2_ID: VarId = 1001;
const SERIES_BASE: VarId = 5000;
const Z_BASE: VarId = 10_000;
const Z_STRIDE: VarId = 1000;

impl Var {
    pub fn id(self) -> VarId {
        match self {
            Var::Hbar => 0,
            Var::Eps(e) => {
                assert!((e as VarId) < EPS1_ID - EPS_BASE, "too many arrows");
                EPS_BASE + e as VarId
            }
            Var::Eps1 => EPS1_ID,
            Var::Eps2 => EPS2_ID,
            Var::Series(k) => {
                assert!((k as VarId) < Z_BASE - SERIES_BASE);
                SERIES_BASE + k as VarId
            }
            Var::Z(i, k) => {
                assert!((k as VarId) < Z_STRIDE, "too many variables of one colour");
                Z_BASE + i as VarId * Z_STRIDE + k as VarId
            }
        }
    }

    pub fn from_id(id: VarId) -> Var {
        match id {
            0 => Var::Hbar,
            EPS1_ID => Var::Eps1,
            EPS2_ID => Var::Eps2,
            x if x >= Z_BASE => Var::Z(((x - Z_BASE) / Z_STRIDE) as usize, ((x - Z_BASE) % Z_STRIDE) as usize),
            x if x >= SERIES_BASE => Var::Series((x - SERIES_BASE) as usize),
            x => Var::Eps((x - EPS_BASE) as usize),
        }
    }

    pub fn is_z(id: VarId) -> bool {
        id >= Z_BASE
    }

    pub fn is_series(id: VarId) -> bool {
        (SERIES_BASE..Z_BASE).contains(&id)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Hbar => write!(f, "h"),
            Var::Eps(e) => write!(f, "e{e}"),
            Var::Eps1 => write!(f, "eps1"),
            Var::Eps2 => write!(f, "eps2"),
            Var::Series(k) => match k {
                0..=2 => write!(f, "{}", ["u", "v", "w"][*k]),
                _ => write!(f, "u{k}"),
            },
            Var::Z(i, k) => write!(f, "z{i}_{}", k + 1),
        }
    }
}

impl std::str::FromStr for Var {
    type Err = String;
    fn from_str(s: &str) -> Result<Var, String> {
        let bad = || format!("unknown variable `{s}`");
        match s {
            "h" => Ok(Var::Hbar),
            "eps1" => Ok(Var::Eps1),
            "eps2" => Ok(Var::Eps2),
            "u" => Ok(Var::Series(0)),
            "v" => Ok(Var::Series(1)),
            "w" => Ok(Var::Series(2)),
            _ if s.starts_with('u') => s[1..].parse().map(Var::Series).map_err(|_| bad()),
            _ if s.starts_with('e') => s[1..].parse().map(Var::Eps).map_err(|_| bad()),
            _ if s.starts_with('z') => {
                let (i, k) = s[1..].split_once('_').ok_or_else(bad)?;
                let i: usize = i.parse().map_err(|_| bad())?;
                let k: usize = k.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                Ok(Var::Z(i, k - 1))
            }
            _ => Err(bad()),
        }
    }
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A polynomial `Σ c_m m` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![], c);
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(vec![(v.id(), 1)], BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Poly) {
        for (m, c) in o.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c · o`.
    pub fn add_scaled_assign(&mut self, o: &Poly, c: &BigRational) {
        for (m, x) in o.terms() {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut acc: std::collections::HashMap<Mono, BigRational> = std::collections::HashMap::new();
        for (m1, c1) in self.terms() {
            for (m2, c2) in o.terms() {
                let m = mono_mul(m1, m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// All variables that occur.
    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| *v)).collect()
    }

    /// Ring map sending each variable `v` to `f(v)` (or itself when `None`).
    pub fn substitute(&self, f: &impl Fn(VarId) -> Option<Poly>) -> Poly {
        let mut cache: BTreeMap<(VarId, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut term = Poly::constant(c.clone());
            let mut kept: Mono = Vec::new();
            for &(v, e) in m {
                match f(v) {
                    None => kept.push((v, e)),
                    Some(img) => {
                        let p = cache.entry((v, e)).or_insert_with(|| img.pow(e));
                        term = term.mul(p);
                    }
                }
            }
            if !kept.is_empty() {
                term = term.mul(&Poly::monomial(kept, BigRational::one()));
            }
            out.add_assign(&term);
        }
        out
    }

    /// Injective renaming of variables.
    pub fn rename(&self, f: &impl Fn(VarId) -> VarId) -> Poly {
        Poly {
            terms: self
                .terms()
                .map(|(m, c)| {
                    let mut nm: Mono = m.iter().map(|&(v, e)| (f(v), e)).collect();
                    nm.sort_unstable_by_key(|x| x.0);
                    (nm, c.clone())
                })
                .collect(),
        }
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Poly {
        self.rename(&|v| if v == a { b } else if v == b { a } else { v })
    }

    /// Splits as `Σ_k c_k · x^k` with `c_k` free of `x`.
    pub fn coefficients_in(&self, x: VarId) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in self.terms() {
            let k = m.iter().find(|(v, _)| *v == x).map_or(0, |(_, e)| *e);
            let rest: Mono = m.iter().filter(|(v, _)| *v != x).copied().collect();
            out.entry(k).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Exact division by `x_a − x_b`; `Err(remainder)` when it does not divide.
    pub fn div_linear(&self, a: VarId, b: VarId) -> Result<Poly, Poly> {
        let coeffs = self.coefficients_in(a);
        let Some(&top) = coeffs.keys().next_back() else { return Ok(Poly::zero()) };
        let xb = Poly::monomial(vec![(b, 1)], BigRational::one());
        // synthetic division: q_{k-1} = c_k + x_b q_k
        let mut quotient = Poly::zero();
        let mut carry = Poly::zero();
        for k in (1..=top).rev() {
            let ck = coeffs.get(&k).cloned().unwrap_or_default();
            carry = ck.add(&xb.mul(&carry));
            let xa = if k > 1 { Poly::monomial(vec![(a, k - 1)], BigRational::one()) } else { Poly::one() };
            quotient.add_assign(&carry.mul(&xa));
        }
        let c0 = coeffs.get(&0).cloned().unwrap_or_default();
        let rem = c0.add(&xb.mul(&carry));
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(rem)
        }
    }

    /// Total degree in the variables satisfying `pred`, maximized over terms.
    pub fn degree_in(&self, pred: impl Fn(VarId) -> bool) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().filter(|(v, _)| pred(*v)).map(|(_, e)| e).sum()).max()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_empty() {
                parts.push(abs.to_string());
            }
            for &(v, e) in m {
                let name = Var::from_id(v).to_string();
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
