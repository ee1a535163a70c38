//! Elements of the shuffle algebra.

use std::fmt;

use itertools::Itertools;
use num_traits::One;
use quiver_core::{BigRational, DimVector};

use crate::poly::{Mono, Poly, Var};
use crate::ShuffleError;

/// A symmetric polynomial in `z_{i,1..d_i}` of weight `d`, over the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShuffleElt {
    weight: DimVector,
    poly: Poly,
}

impl ShuffleElt {
    /// Validates that only variables of `weight` occur and that `poly` is symmetric.
    pub fn new(weight: DimVector, poly: Poly) -> Result<Self, ShuffleError> {
        if !weight.is_nonneg() {
            return Err(ShuffleError::Domain(format!("weight {weight} is not in N^I")));
        }
        for v in poly.vars() {
            match Var::from_id(v) {
                Var::Z(i, k) if i < weight.len() && (k as i64) < weight[i] => {}
                Var::Z(..) | Var::Series(_) => {
                    return Err(ShuffleError::StrayVariable { var: Var::from_id(v).to_string(), weight: weight.to_string() })
                }
                _ => {}
            }
        }
        for (i, &di) in weight.iter().enumerate() {
            for k in 1..di as usize {
                let (a, b) = (Var::Z(i, k - 1).id(), Var::Z(i, k).id());
                if poly.swap_vars(a, b) != poly {
                    return Err(ShuffleError::NotSymmetric { colour: i });
                }
            }
        }
        Ok(ShuffleElt { weight, poly })
    }

    /// The orbit sum of `∏_i ∏_k z_{i,k}^{exps[i][k]}` under the colourwise symmetric groups,
    /// i.e. a product of monomial symmetric functions. `exps[i]` must have length `weight[i]`.
    pub fn monomial_symmetric(weight: DimVector, exps: &[Vec<u32>]) -> Result<Self, ShuffleError> {
        if exps.len() != weight.len() || exps.iter().zip(weight.iter()).any(|(e, &d)| e.len() as i64 != d) {
            return Err(ShuffleError::Domain("exponent lists do not match the weight".into()));
        }
        let mut poly = Poly::one();
        for (i, e) in exps.iter().enumerate() {
            let mut orbit = Poly::zero();
            for perm in e.iter().copied().permutations(e.len()).unique() {
                let m: Mono = perm.iter().enumerate().filter(|(_, &x)| x > 0).map(|(k, &x)| (Var::Z(i, k).id(), x)).collect();
                orbit.add_term(m, BigRational::one());
            }
            poly = poly.mul(&orbit);
        }
        ShuffleElt::new(weight, poly)
    }

    /// The unit `1` in weight zero.
    pub fn unit(vertices: usize) -> Self {
        ShuffleElt { weight: DimVector::zero(vertices), poly: Poly::one() }
    }

    pub fn zero(weight: DimVector) -> Self {
        ShuffleElt { weight, poly: Poly::zero() }
    }

    pub fn weight(&self) -> &DimVector {
        &self.weight
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn same_weight(&self, o: &ShuffleElt) -> Result<(), ShuffleError> {
        if self.weight != o.weight {
            return Err(ShuffleError::Domain(format!("weights {} and {} differ", self.weight, o.weight)));
        }
        Ok(())
    }

    pub fn add(&self, o: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
        self.same_weight(o)?;
        Ok(ShuffleElt { weight: self.weight.clone(), poly: self.poly.add(&o.poly) })
    }

    pub fn sub(&self, o: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
        self.same_weight(o)?;
        Ok(ShuffleElt { weight: self.weight.clone(), poly: self.poly.sub(&o.poly) })
    }

    pub fn scale(&self, c: &BigRational) -> ShuffleElt {
        ShuffleElt { weight: self.weight.clone(), poly: self.poly.scale(c) }
    }

    /// Multiplication by an element of the coefficient ring; `c` must not contain `z` variables.
    pub fn scale_ring(&self, c: &Poly) -> Result<ShuffleElt, ShuffleError> {
        if c.vars().into_iter().any(|v| Var::is_z(v) || Var::is_series(v)) {
            return Err(ShuffleError::Domain(format!("{c} is not in the coefficient ring")));
        }
        Ok(ShuffleElt { weight: self.weight.clone(), poly: self.poly.mul(c) })
    }

    /// Multiplication by a symmetric polynomial of the same colours.
    pub(crate) fn mul_symmetric(&self, f: &Poly) -> ShuffleElt {
        ShuffleElt { weight: self.weight.clone(), poly: self.poly.mul(f) }
    }

    pub(crate) fn map_poly(&self, f: impl FnOnce(&Poly) -> Poly) -> ShuffleElt {
        ShuffleElt { weight: self.weight.clone(), poly: f(&self.poly) }
    }

    /// Text form: a `weight` header, then one `coefficient var^exp ...` line per monomial.
    pub fn to_text(&self) -> String {
        let mut out = String::from("weight");
        for d in self.weight.iter() {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
        for (m, c) in self.poly.terms() {
            out.push_str(&c.to_string());
            for &(v, e) in m {
                out.push_str(&format!(" {}^{e}", Var::from_id(v)));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ShuffleElt, ShuffleError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, message: String| ShuffleError::Parse { line: line + 1, message };
        let (n0, header) = lines.next().ok_or_else(|| perr(0, "empty input".into()))?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("weight") {
            return Err(perr(n0, "expected `weight` header".into()));
        }
        let weight: Vec<i64> =
            toks.map(|t| t.parse().map_err(|_| perr(n0, format!("bad weight entry `{t}`")))).collect::<Result<_, _>>()?;
        let mut poly = Poly::zero();
        for (n, line) in lines {
            let mut toks = line.split_whitespace();
            let c_tok = toks.next().expect("nonempty line");
            let c: BigRational = c_tok.parse().map_err(|_| perr(n, format!("bad coefficient `{c_tok}`")))?;
            let mut m: Mono = Vec::new();
            for t in toks {
                let (v, e) = t.split_once('^').unwrap_or((t, "1"));
                let v: Var = v.parse().map_err(|e| perr(n, e))?;
                let e: u32 = e.parse().map_err(|_| perr(n, format!("bad exponent in `{t}`")))?;
                if e > 0 {
                    m.push((v.id(), e));
                }
            }
            m.sort_unstable_by_key(|x| x.0);
            if m.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(perr(n, "repeated variable".into()));
            }
            poly.add_term(m, c);
        }
        ShuffleElt::new(DimVector(weight), poly)
    }
}

impl fmt::Display for ShuffleElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.weight, self.poly)
    }
}

/// `z_{i,1}^l` in weight `α_i`: the image of `x⁻_{i,l}`.
pub fn generator(vertices: usize, i: usize, l: u32) -> ShuffleElt {
    let poly = if l == 0 { Poly::one() } else { Poly::monomial(vec![(Var::Z(i, 0).id(), l)], BigRational::one()) };
    ShuffleElt { weight: DimVector::simple(vertices, i), poly }
}
