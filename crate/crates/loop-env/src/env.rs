use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use quiver_core::{BigRational, CoweightVector, DimVector};

use crate::lie::{parse_rational, LieEltLoop, LoopAlgebra, Sym};
use crate::rootsys::FiniteBasis;
use crate::LoopError;

pub type Monomial = Vec<Sym>;

/// A rational combination of monomials in Lie basis symbols. Whether the
/// monomials are normal depends on the [`Pbw`] that produced the element.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnvElt {
    terms: BTreeMap<Monomial, BigRational>,
}

impl EnvElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(vec![])
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, BigRational::one());
        e
    }

    pub fn from_lie(x: &LieEltLoop) -> Self {
        let mut e = Self::zero();
        for (s, c) in x.terms() {
            e.add_term(vec![s.clone()], c.clone());
        }
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[Sym]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &EnvElt, c: &BigRational) {
        for (m, x) in &o.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, o: &EnvElt) -> EnvElt {
        let mut r = self.clone();
        r.add_scaled(o, &BigRational::one());
        r
    }

    pub fn sub(&self, o: &EnvElt) -> EnvElt {
        let mut r = self.clone();
        r.add_scaled(o, &-BigRational::one());
        r
    }

    pub fn scale(&self, c: &BigRational) -> EnvElt {
        let mut r = EnvElt::zero();
        r.add_scaled(self, c);
        r
    }

    /// Concatenation product, without normalizing.
    pub fn concat(&self, o: &EnvElt) -> EnvElt {
        let mut r = EnvElt::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut m = a.clone();
                m.extend(b.iter().cloned());
                r.add_term(m, x * y);
            }
        }
        r
    }

    pub fn filter(&self, keep: impl Fn(&[Sym]) -> bool) -> EnvElt {
        EnvElt { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn display<'a>(&'a self, alg: &'a LoopAlgebra) -> impl fmt::Display + 'a {
        DisplayEnv { alg, x: self }
    }

    /// One line `coeff : sym * sym * ...` per term; the empty monomial is `1`.
    pub fn to_text(&self, alg: &LoopAlgebra) -> String {
        let mut s = String::new();
        for (m, c) in &self.terms {
            s.push_str(&format!("{c} : {}\n", mono_label(alg, m)));
        }
        s
    }

    pub fn from_text(alg: &LoopAlgebra, text: &str) -> Result<EnvElt, LoopError> {
        let mut out = EnvElt::zero();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (c, m) =
                line.split_once(':').ok_or_else(|| LoopError::Parse(format!("expected `coeff : monomial` in `{line}`")))?;
            let c = parse_rational(c)?;
            let m = m.trim();
            let mono = if m == "1" {
                vec![]
            } else {
                m.split('*').map(|s| alg.parse_sym(s)).collect::<Result<Vec<_>, _>>()?
            };
            out.add_term(mono, c);
        }
        Ok(out)
    }
}

fn mono_label(alg: &LoopAlgebra, m: &[Sym]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter().map(|s| alg.label(s)).collect::<Vec<_>>().join(" * ")
}

struct DisplayEnv<'a> {
    alg: &'a LoopAlgebra,
    x: &'a EnvElt,
}

impl fmt::Display for DisplayEnv<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.x.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {}", mono_label(self.alg, m))?;
        }
        Ok(())
    }
}

/// Which slope function drives the PBW order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    /// Nonnegative-weight symbols first, then `n_ell` by increasing
    /// `μ_θ(d) = (θ, d)/(ρ̌, d)` of `d = −weight`.
    Slope,
    /// `n⁺_ell` by increasing `−(ρ̌, β)/(θ, β)`, weight-`kδ` symbols last.
    Completion,
}

/// A total order on basis symbols: slope class first, ties broken by
/// (weight lex, s-degree, t-degree, root index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwOrder {
    pub kind: OrderKind,
    pub theta: CoweightVector,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    class: u8,
    slope: BigRational,
    weight: Vec<i64>,
    s: i64,
    t: u32,
    tag: u8,
    idx: i64,
}

impl PbwOrder {
    pub fn slope(alg: &LoopAlgebra, theta: CoweightVector) -> Result<Self, LoopError> {
        if theta.len() != alg.vertices() {
            return Err(LoopError::Configuration(format!("θ {theta} has the wrong rank")));
        }
        Ok(PbwOrder { kind: OrderKind::Slope, theta })
    }

    /// Needs `(θ, δ) = 0` and `(θ, α_i) > 0` on the finite vertices.
    pub fn completion(alg: &LoopAlgebra, theta: CoweightVector) -> Result<Self, LoopError> {
        if theta.len() != alg.vertices() {
            return Err(LoopError::Configuration(format!("θ {theta} has the wrong rank")));
        }
        let on_delta = theta.pair(&alg.affine().delta)?;
        if !on_delta.is_zero() || (1..alg.vertices()).any(|i| theta.0[i] <= BigRational::zero()) {
            return Err(LoopError::Configuration(format!("θ {theta} must vanish on δ and be positive on α_1..α_e")));
        }
        Ok(PbwOrder { kind: OrderKind::Completion, theta })
    }

    /// `θ = (−(h−1), 1, …, 1)`, i.e. `ρ̌` on the finite part extended by `(θ, δ) = 0`.
    pub fn standard_theta(alg: &LoopAlgebra) -> CoweightVector {
        let one = vec![BigRational::one(); alg.vertices() - 1];
        alg.affine().coweight_from_finite(&one)
    }

    fn key(&self, alg: &LoopAlgebra, s: &Sym) -> Key {
        let w = alg.weight(s);
        let (tag, idx) = match s {
            Sym::X { x: FiniteBasis::Root(k), .. } => (0, *k as i64),
            Sym::X { x: FiniteBasis::Cartan(i), .. } => (1, *i as i64),
            Sym::C { .. } => (2, 0),
            Sym::CK { .. } => (3, 0),
        };
        let rho = |d: &DimVector| BigRational::from_integer(d.total().into());
        let pair = |d: &DimVector| self.theta.pair(d).expect("rank checked");
        let (class, slope) = match self.kind {
            OrderKind::Slope => {
                if w.is_zero() {
                    (1, BigRational::zero())
                } else if w.is_nonneg() {
                    (0, pair(&w) / rho(&w))
                } else {
                    let d = -&w;
                    (2, pair(&d) / rho(&d))
                }
            }
            OrderKind::Completion => {
                let r = pair(&w);
                match r.cmp(&BigRational::zero()) {
                    Ordering::Greater => (0, -rho(&w) / r),
                    Ordering::Equal => (1, BigRational::zero()),
                    Ordering::Less => (2, BigRational::zero()),
                }
            }
        };
        Key { class, slope, weight: w.0, s: s.s_degree(), t: s.t_degree(), tag, idx }
    }

    /// The slope used by the order, if the symbol has a finite one.
    pub fn slope_of(&self, alg: &LoopAlgebra, s: &Sym) -> Option<BigRational> {
        let k = self.key(alg, s);
        match (&self.kind, k.class) {
            (OrderKind::Slope, 2) | (OrderKind::Completion, 0) => Some(k.slope),
            _ => None,
        }
    }
}

/// PBW straightening in `U(g_ell)` under a fixed order, with a memo of
/// normal forms of monomials.
pub struct Pbw<'a> {
    alg: &'a LoopAlgebra,
    order: PbwOrder,
    cap: usize,
    keys: RefCell<HashMap<Sym, Key>>,
    memo: RefCell<HashMap<Monomial, EnvElt>>,
}

impl<'a> Pbw<'a> {
    pub const DEFAULT_CAP: usize = 2_000_000;

    pub fn new(alg: &'a LoopAlgebra, order: PbwOrder) -> Self {
        Self::with_cap(alg, order, Self::DEFAULT_CAP)
    }

    /// `cap` bounds the number of distinct monomials straightened.
    pub fn with_cap(alg: &'a LoopAlgebra, order: PbwOrder, cap: usize) -> Self {
        Pbw { alg, order, cap, keys: RefCell::new(HashMap::new()), memo: RefCell::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &'a LoopAlgebra {
        self.alg
    }

    pub fn order(&self) -> &PbwOrder {
        &self.order
    }

    fn key(&self, s: &Sym) -> Key {
        if let Some(k) = self.keys.borrow().get(s) {
            return k.clone();
        }
        let k = self.order.key(self.alg, s);
        self.keys.borrow_mut().insert(s.clone(), k.clone());
        k
    }

    pub fn cmp(&self, a: &Sym, b: &Sym) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_normal(&self, m: &[Sym]) -> bool {
        m.windows(2).all(|w| self.cmp(&w[0], &w[1]) != Ordering::Greater)
    }

    pub fn normalize(&self, x: &EnvElt) -> Result<EnvElt, LoopError> {
        let mut out = EnvElt::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.normal_monomial(m)?, c);
        }
        Ok(out)
    }

    pub fn mul(&self, a: &EnvElt, b: &EnvElt) -> Result<EnvElt, LoopError> {
        self.normalize(&a.concat(b))
    }

    /// Normal form of a product of Lie elements.
    pub fn product(&self, factors: &[LieEltLoop]) -> Result<EnvElt, LoopError> {
        let mut acc = EnvElt::one();
        for f in factors {
            acc = acc.concat(&EnvElt::from_lie(f));
        }
        self.normalize(&acc)
    }

    pub fn pow(&self, a: &EnvElt, n: u32) -> Result<EnvElt, LoopError> {
        let mut acc = EnvElt::one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    fn normal_monomial(&self, m: &[Sym]) -> Result<EnvElt, LoopError> {
        let Some(i) = (0..m.len().saturating_sub(1)).find(|&i| self.cmp(&m[i], &m[i + 1]) == Ordering::Greater)
        else {
            return Ok(EnvElt::monomial(m.to_vec()));
        };
        if let Some(r) = self.memo.borrow().get(m) {
            return Ok(r.clone());
        }
        if self.memo.borrow().len() >= self.cap {
            return Err(LoopError::Truncation { monomial: mono_label(self.alg, m) });
        }
        let mut swapped = m.to_vec();
        swapped.swap(i, i + 1);
        let mut out = self.normal_monomial(&swapped)?;
        for (s, c) in self.alg.bracket_sym(&m[i], &m[i + 1]).terms() {
            let mut r = m[..i].to_vec();
            r.push(s.clone());
            r.extend(m[i + 2..].iter().cloned());
            out.add_scaled(&self.normal_monomial(&r)?, c);
        }
        self.memo.borrow_mut().insert(m.to_vec(), out.clone());
        Ok(out)
    }
}

/// Divided power `x^n / n!` of a Lie element, normalized.
pub fn divided_power(pbw: &Pbw<'_>, x: &LieEltLoop, n: u32) -> Result<EnvElt, LoopError> {
    let p = pbw.pow(&EnvElt::from_lie(x), n)?;
    let fact: u64 = (1..=u64::from(n)).product();
    Ok(p.scale(&BigRational::new(1.into(), fact.into())))
}
