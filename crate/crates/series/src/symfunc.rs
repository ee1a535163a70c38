use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use quiver_core::BigRational;

/// A partition, parts in decreasing order, no zero parts.
pub type Partition = Vec<u32>;

fn normalize(mut p: Vec<u32>) -> Partition {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// A finite ℚ-combination of monomial symmetric functions `m_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymFunc(BTreeMap<Partition, BigRational>);

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::monomial(vec![])
    }

    /// `m_λ`; the parts may be given in any order.
    pub fn monomial(lambda: Vec<u32>) -> Self {
        let mut s = SymFunc::zero();
        s.add_term(normalize(lambda), BigRational::from_integer(1.into()));
        s
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        let v = self.0.entry(lambda.clone()).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &[u32]) -> BigRational {
        self.0.get(&normalize(lambda.to_vec())).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in o.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, x) in self.terms() {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    /// Keeps only the homogeneous part of degree `n`.
    pub fn degree_part(&self, n: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, c) in self.terms() {
            if l.iter().sum::<u32>() == n {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(l, c)| {
                let idx: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                format!("{c}*m({})", idx.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Partitions of `n`, each in decreasing order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of rearrangements `a` of `λ` (zero-padded to `ℓ(ν)`) with `a <= ν`
/// and `ν − a` a rearrangement of `μ`.
fn structure_constant(lambda: &[u32], mu: &[u32], nu: &[u32]) -> i64 {
    if lambda.len() > nu.len() || mu.len() > nu.len() {
        return 0;
    }
    let mut lam: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in lambda {
        *lam.entry(x).or_default() += 1;
    }
    *lam.entry(0).or_default() += nu.len() - lambda.len();
    let mut want = mu.to_vec();
    want.resize(nu.len(), 0);
    want.sort_unstable();

    fn go(pos: usize, nu: &[u32], lam: &mut BTreeMap<u32, usize>, rest: &mut Vec<u32>, want: &[u32]) -> i64 {
        if pos == nu.len() {
            let mut r = rest.clone();
            r.sort_unstable();
            return i64::from(r == want);
        }
        let keys: Vec<u32> = lam.iter().filter(|(&k, &c)| c > 0 && k <= nu[pos]).map(|(&k, _)| k).collect();
        let mut total = 0;
        for k in keys {
            *lam.get_mut(&k).unwrap() -= 1;
            rest.push(nu[pos] - k);
            total += go(pos + 1, nu, lam, rest, want);
            rest.pop();
            *lam.get_mut(&k).unwrap() += 1;
        }
        total
    }
    go(0, nu, &mut lam, &mut Vec::new(), &want)
}

/// `m_λ m_μ = Σ_ν n^ν_{λμ} m_ν`.
fn monomial_product(lambda: &[u32], mu: &[u32]) -> SymFunc {
    let n: u32 = lambda.iter().sum::<u32>() + mu.iter().sum::<u32>();
    let mut out = SymFunc::zero();
    for nu in partitions(n) {
        if nu.len() > lambda.len() + mu.len() {
            continue;
        }
        let c = structure_constant(lambda, mu, &nu);
        if c != 0 {
            out.add_term(nu, BigRational::from_integer(c.into()));
        }
    }
    out
}

pub fn symfunc_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (l, a) in f.terms() {
        for (m, b) in g.terms() {
            out = out.add(&monomial_product(l, m).scale(&(a * b)));
        }
    }
    out
}

/// `p_n = m_(n)`.
pub fn power_sum(n: u32) -> SymFunc {
    SymFunc::monomial(vec![n])
}

/// `e_n = m_(1^n)`.
pub fn elementary(n: u32) -> SymFunc {
    SymFunc::monomial(vec![1; n as usize])
}
