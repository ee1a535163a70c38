use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use quiver_core::{find_delta, AffineData, BigRational, DimVector, Quiver};

use crate::rootsys::{FiniteBasis, FiniteBracket, RootSystemF};
use crate::LoopError;

/// A basis symbol of the elliptic Lie algebra: `x s^k t^m`, `c_ℓ = t^ℓ s^{-1}ds`
/// or `c_{k,ℓ} = t^ℓ s^{k-1}ds` (`k ≠ 0`, `ℓ ≥ 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    X { x: FiniteBasis, s: i64, t: u32 },
    C { l: u32 },
    CK { k: i64, l: u32 },
}

impl Sym {
    pub fn is_central(&self) -> bool {
        !matches!(self, Sym::X { .. })
    }

    pub fn t_degree(&self) -> u32 {
        match self {
            Sym::X { t, .. } => *t,
            Sym::C { l } | Sym::CK { l, .. } => *l,
        }
    }

    pub fn s_degree(&self) -> i64 {
        match self {
            Sym::X { s, .. } => *s,
            Sym::C { .. } => 0,
            Sym::CK { k, .. } => *k,
        }
    }
}

/// A finite rational combination of [`Sym`]s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieEltLoop {
    terms: BTreeMap<Sym, BigRational>,
}

impl LieEltLoop {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(s: Sym) -> Self {
        let mut e = Self::zero();
        e.add_term(s, BigRational::one());
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

    pub fn terms(&self) -> impl Iterator<Item = (&Sym, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &Sym) -> BigRational {
        self.terms.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, s: Sym, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(s.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, o: &LieEltLoop) -> LieEltLoop {
        let mut r = self.clone();
        for (s, c) in &o.terms {
            r.add_term(s.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &LieEltLoop) -> LieEltLoop {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> LieEltLoop {
        if c.is_zero() {
            return Self::zero();
        }
        LieEltLoop { terms: self.terms.iter().map(|(s, x)| (s.clone(), x * c)).collect() }
    }
}

/// The elliptic Lie algebra `uce(g_f[s^{±1}, t])` of an affine ADE quiver,
/// with `g_f` realized on the finite vertices `1..=e`.
#[derive(Debug, Clone)]
pub struct LoopAlgebra {
    quiver: Quiver,
    aff: AffineData,
    rs: RootSystemF,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl LoopAlgebra {
    pub fn new(q: &Quiver) -> Result<Self, LoopError> {
        let aff = find_delta(q)?;
        let rs = RootSystemF::new(&q.finite_part())?;
        Ok(LoopAlgebra { quiver: q.clone(), aff, rs })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn affine(&self) -> &AffineData {
        &self.aff
    }

    pub fn root_system(&self) -> &RootSystemF {
        &self.rs
    }

    /// Number of vertices of the affine quiver.
    pub fn vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn root(&self, alpha: &[i64], s: i64, t: u32) -> Sym {
        let k = self.rs.root_index(&DimVector::from_slice(alpha)).expect("not a root");
        Sym::X { x: FiniteBasis::Root(k), s, t }
    }

    /// `h_i s^k t^m` for an affine vertex label `i ≥ 1`.
    pub fn cartan(&self, i: usize, s: i64, t: u32) -> Sym {
        assert!(i >= 1 && i < self.vertices(), "h_i needs a finite vertex");
        Sym::X { x: FiniteBasis::Cartan(i - 1), s, t }
    }

    /// `x_i^±` with `t`-degree `t`; `x_0^± = E_{∓φ} s^{±1}`.
    pub fn chevalley(&self, i: usize, plus: bool, t: u32) -> LieEltLoop {
        let sym = if i == 0 {
            let phi = self.rs.highest_root();
            let (k, s) = if plus { (self.rs.negate(phi), 1) } else { (phi, -1) };
            Sym::X { x: FiniteBasis::Root(k), s, t }
        } else {
            let k = self.rs.simple(i - 1);
            let k = if plus { k } else { self.rs.negate(k) };
            Sym::X { x: FiniteBasis::Root(k), s: 0, t }
        };
        LieEltLoop::basis(sym)
    }

    /// Weight in ℤI of the affine quiver: `α + kδ`.
    pub fn weight(&self, s: &Sym) -> DimVector {
        let n = self.vertices();
        let mut w = DimVector::zero(n);
        if let Sym::X { x: FiniteBasis::Root(k), .. } = s {
            for (i, c) in self.rs.root(*k).iter().enumerate() {
                w[i + 1] = *c;
            }
        }
        &w + &self.aff.delta.scale(s.s_degree())
    }

    /// True for symbols of `n_ell`, i.e. weight in `−(ℕI∖0)`.
    pub fn is_negative(&self, s: &Sym) -> bool {
        let w = self.weight(s);
        !w.is_zero() && w.is_nonpos()
    }

    pub fn bracket_sym(&self, a: &Sym, b: &Sym) -> LieEltLoop {
        let mut out = LieEltLoop::zero();
        let (Sym::X { x, s: k, t: l }, Sym::X { x: y, s: h, t: n }) = (a, b) else {
            return out;
        };
        match self.rs.bracket(*x, *y) {
            FiniteBracket::Zero => {}
            FiniteBracket::Root(c, r) => {
                out.add_term(Sym::X { x: FiniteBasis::Root(r), s: k + h, t: l + n }, q(c));
            }
            FiniteBracket::Cartan(v) => {
                for (i, c) in v.into_iter().enumerate() {
                    out.add_term(Sym::X { x: FiniteBasis::Cartan(i), s: k + h, t: l + n }, q(c));
                }
            }
        }
        let f = self.rs.form(*x, *y);
        if f != 0 {
            let m = l + n;
            if k + h == 0 {
                out.add_term(Sym::C { l: m }, q(k * f));
            } else if m >= 1 {
                // b·da modulo exact forms, with s^{p}t^{m-1}dt ≡ −(p/m) s^{p-1}t^m ds
                let (l, n) = (i64::from(*l), i64::from(*n));
                let c = BigRational::new((k * n - l * h).into(), (l + n).into()) * q(f);
                out.add_term(Sym::CK { k: k + h, l: m }, c);
            }
        }
        out
    }

    pub fn bracket(&self, a: &LieEltLoop, b: &LieEltLoop) -> LieEltLoop {
        let mut out = LieEltLoop::zero();
        for (sa, ca) in a.terms() {
            for (sb, cb) in b.terms() {
                let c = ca * cb;
                for (s, x) in self.bracket_sym(sa, sb).terms() {
                    out.add_term(s.clone(), x * &c);
                }
            }
        }
        out
    }

    pub fn label(&self, s: &Sym) -> String {
        match s {
            Sym::X { x, s, t } => format!("{}s^{} t^{}", self.rs.label(*x), s, t),
            Sym::C { l } => format!("c[{l}]"),
            Sym::CK { k, l } => format!("c[{k},{l}]"),
        }
    }

    /// Parses `e[1,0]s^-1 t^0`, `h[1]s^2`, `c[0]` or `c[-1,2]`; missing
    /// `s^`/`t^` parts default to zero.
    pub fn parse_sym(&self, text: &str) -> Result<Sym, LoopError> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || LoopError::Parse(format!("bad basis symbol `{text}`"));
        let open = text.find('[').ok_or_else(err)?;
        let close = text.find(']').ok_or_else(err)?;
        let head = &text[..open];
        let args: Vec<i64> = text[open + 1..close]
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        let rest = &text[close + 1..];
        let (mut s, mut t) = (0i64, 0u32);
        let mut r = rest;
        if let Some(x) = r.strip_prefix("s^") {
            let end = x.find('t').unwrap_or(x.len());
            s = x[..end].parse().map_err(|_| err())?;
            r = &x[end..];
        }
        if let Some(x) = r.strip_prefix("t^") {
            t = x.parse().map_err(|_| err())?;
            r = "";
        }
        if !r.is_empty() {
            return Err(err());
        }
        match head {
            "e" => {
                let k = self.rs.root_index(&DimVector(args)).ok_or_else(err)?;
                Ok(Sym::X { x: FiniteBasis::Root(k), s, t })
            }
            "h" if args.len() == 1 && args[0] >= 1 && (args[0] as usize) < self.vertices() => {
                Ok(Sym::X { x: FiniteBasis::Cartan(args[0] as usize - 1), s, t })
            }
            "c" if rest.is_empty() && args.len() == 1 && args[0] >= 0 => Ok(Sym::C { l: args[0] as u32 }),
            "c" if rest.is_empty() && args.len() == 2 && args[0] != 0 && args[1] >= 1 => {
                Ok(Sym::CK { k: args[0], l: args[1] as u32 })
            }
            _ => Err(err()),
        }
    }

    /// Parses `2*e[1]s^1 - 1/2*h[1]s^0 t^1 + c[0]`.
    pub fn parse_elt(&self, text: &str) -> Result<LieEltLoop, LoopError> {
        let mut out = LieEltLoop::zero();
        for (sign, term) in split_signed(text) {
            let (c, sym) = match term.split_once('*') {
                Some((c, s)) => (parse_rational(c)?, s),
                None => (BigRational::one(), term.as_str()),
            };
            out.add_term(self.parse_sym(sym)?, c * q(sign));
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, x: &'a LieEltLoop) -> impl fmt::Display + 'a {
        DisplayLie { alg: self, x }
    }
}

struct DisplayLie<'a> {
    alg: &'a LoopAlgebra,
    x: &'a LieEltLoop,
}

impl fmt::Display for DisplayLie<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.x.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{}", self.alg.label(s))?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational, LoopError> {
    text.trim().parse::<BigRational>().map_err(|_| LoopError::Parse(format!("bad coefficient `{text}`")))
}

/// Splits `a + b - c` at top-level signs, ignoring those inside brackets or after `^`.
pub(crate) fn split_signed(text: &str) -> Vec<(i64, String)> {
    let mut out = vec![];
    let mut cur = String::new();
    let mut sign = 1;
    let mut depth = 0;
    let mut prev = ' ';
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        let top = depth == 0 && prev != '^' && prev != '/' && prev != '*' && !cur.trim().is_empty();
        if (ch == '+' || ch == '-') && top {
            out.push((sign, cur.trim().to_string()));
            cur.clear();
            sign = if ch == '-' { -1 } else { 1 };
        } else if (ch == '+' || ch == '-') && depth == 0 && cur.trim().is_empty() && prev != '^' {
            if ch == '-' {
                sign = -sign;
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !cur.trim().is_empty() {
        out.push((sign, cur.trim().to_string()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
        for s in ["e[1,1]s^-2 t^1", "h[2]s^0 t^0", "c[3]", "c[-1,2]", "e[-1,0]s^3 t^0"] {
            let sym = alg.parse_sym(s).unwrap();
            assert_eq!(alg.label(&sym), s);
        }
        let x = alg.parse_elt("2*e[1,0]s^-1 - 1/2*h[1]s^2 t^1 + c[0]").unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(x.coeff(&alg.cartan(1, 2, 1)), BigRational::new((-1).into(), 2.into()));
        assert!(alg.parse_sym("e[1,1,1]").is_err());
        assert!(alg.parse_sym("c[0,1]").is_err());
    }
}
