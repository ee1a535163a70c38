//! The shuffle product.

use itertools::Itertools;
use num_integer::Integer;
use num_traits::One;
use quiver_core::{BigInt, BigRational, DimVector, DoubledArrow, Quiver};

use crate::element::generator;
use crate::fast::{IPoly, Layout};
use crate::poly::{Poly, Var, VarId};
use crate::{ShuffleElt, ShuffleError};

/// Deliberate corruptions of the shuffle kernel, used to show that relation checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelMutation {
    #[default]
    None,
    /// `ζ_i(z,w) = (z-w+ħ)/(z-w)` instead of `(z-w-ħ)/(z-w)`.
    FlipHbarInSameColour,
    /// Uses `t - ε_e` for this arrow inside `ζ_{i,j}`.
    FlipEdgeSign(DoubledArrow),
}

/// Which coefficient ring the algebra lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parameters {
    /// `ℚ[ε_e, ħ]` with `ε_{e*} = ħ - ε_e`.
    #[default]
    Full,
    /// `ε_e ↦ ε_1`, `ε_{e*} ↦ ε_2`, `ħ ↦ ε_1 + ε_2`.
    TwoParameter,
}

/// The shuffle algebra of a quiver.
#[derive(Debug, Clone)]
pub struct ShuffleAlgebra {
    quiver: Quiver,
    mutation: KernelMutation,
    params: Parameters,
    /// `ζ_{i,j}` factors as lists of ring constants `c` in `t + c`.
    zeta: Vec<Vec<Vec<Poly>>>,
}

/// Per-colour lists of positions occupied by the left factor in a shuffle.
type Shuffle = Vec<Vec<usize>>;

impl ShuffleAlgebra {
    pub fn new(quiver: Quiver) -> Self {
        Self::build(quiver, KernelMutation::None, Parameters::Full)
    }

    pub fn two_parameter(quiver: Quiver) -> Self {
        Self::build(quiver, KernelMutation::None, Parameters::TwoParameter)
    }

    pub fn with_mutation(quiver: Quiver, mutation: KernelMutation) -> Self {
        Self::build(quiver, mutation, Parameters::Full)
    }

    fn build(quiver: Quiver, mutation: KernelMutation, params: Parameters) -> Self {
        let n = quiver.num_vertices();
        let mut zeta = vec![vec![Vec::new(); n]; n];
        for e in quiver.doubled_arrows() {
            let mut c = eps(params, e);
            if mutation == KernelMutation::FlipEdgeSign(e) {
                c = c.neg();
            }
            zeta[quiver.source(e)][quiver.target(e)].push(c);
        }
        ShuffleAlgebra { quiver, mutation, params, zeta }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn parameters(&self) -> Parameters {
        self.params
    }

    pub fn mutation(&self) -> KernelMutation {
        self.mutation
    }

    pub fn vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// `ħ` in this algebra's coefficient ring.
    pub fn hbar(&self) -> Poly {
        hbar(self.params)
    }

    /// `ε_e` for an arrow of the doubled quiver.
    pub fn eps(&self, e: DoubledArrow) -> Poly {
        eps(self.params, e)
    }

    /// `ζ_{i,j}(t)` evaluated at a polynomial `t`.
    pub fn zeta(&self, i: usize, j: usize, t: &Poly) -> Poly {
        self.zeta[i][j].iter().fold(Poly::one(), |acc, c| acc.mul(&t.add(c)))
    }

    pub fn generator(&self, i: usize, l: u32) -> ShuffleElt {
        generator(self.vertices(), i, l)
    }

    pub fn unit(&self) -> ShuffleElt {
        ShuffleElt::unit(self.vertices())
    }

    /// The shuffle product `P ⋆ Q`, including the sign `(-1)^{⟨|P|,|Q|⟩}`.
    pub fn mul(&self, p: &ShuffleElt, q: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
        let sign = self.quiver.euler_form(p.weight(), q.weight())?;
        let out = self.unsigned_mul(p, q)?;
        Ok(if sign % 2 == 0 { out } else { out.scale(&-BigRational::one()) })
    }

    /// The symmetrization without the Euler-form sign.
    pub fn unsigned_mul(&self, p: &ShuffleElt, q: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
        self.unsigned_mul_with(p, q, true)
    }

    /// Same as [`unsigned_mul`](Self::unsigned_mul) but always on the generic polynomial
    /// representation; used to cross-check the packed fast path.
    pub fn unsigned_mul_reference(&self, p: &ShuffleElt, q: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
        self.unsigned_mul_with(p, q, false)
    }

    fn unsigned_mul_with(&self, p: &ShuffleElt, q: &ShuffleElt, fast: bool) -> Result<ShuffleElt, ShuffleError> {
        let n = self.vertices();
        let (d, e) = (p.weight(), q.weight());
        if d.len() != n || e.len() != n {
            return Err(ShuffleError::Domain(format!("weights {d}, {e} do not match {n} vertices")));
        }
        let total = d + e;
        if d.is_zero() {
            return Ok(q.clone());
        }
        if e.is_zero() {
            return Ok(p.clone());
        }
        if p.is_zero() || q.is_zero() {
            return Ok(ShuffleElt::zero(total));
        }
        let shuffles: Vec<Shuffle> = (0..n)
            .map(|i| (0..total[i] as usize).combinations(d[i] as usize).collect::<Vec<_>>())
            .multi_cartesian_product()
            .collect();
        let terms = shuffles.iter().map(|sh| self.shuffle_factors(p, q, sh, &total));
        let vandermonde: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..total[i] as usize).tuple_combinations().map(move |(a, b)| (i, a, b)))
            .collect();
        if fast {
            if let Some(result) = self.symmetrize_packed(p, q, terms.clone(), &vandermonde, &total) {
                return ShuffleElt::new(total, result?);
            }
        }
        let mut numerator = Poly::zero();
        for (factors, negate) in terms {
            let t = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| acc.mul(f));
            numerator.add_assign(&if negate { t.neg() } else { t });
        }
        let mut result = numerator;
        for &(i, a, b) in &vandermonde {
            result = result
                .div_linear(Var::Z(i, a).id(), Var::Z(i, b).id())
                .map_err(|r| ShuffleError::NotPolynomial { colour: i, a, b, remainder: Box::new(r) })?;
        }
        ShuffleElt::new(total, result)
    }

    /// The packed-integer evaluation of the symmetrization; `None` when a bound is exceeded.
    fn symmetrize_packed(
        &self,
        p: &ShuffleElt,
        q: &ShuffleElt,
        terms: impl Iterator<Item = (Vec<Poly>, bool)>,
        vandermonde: &[(usize, usize, usize)],
        total: &DimVector,
    ) -> Option<Result<Poly, ShuffleError>> {
        let mut vars: Vec<VarId> = p.poly().vars().into_iter().chain(q.poly().vars()).collect();
        vars.push(Var::Hbar.id());
        match self.params {
            Parameters::Full => vars.extend((0..self.quiver.arrows().len()).map(|k| Var::Eps(k).id())),
            Parameters::TwoParameter => vars.extend([Var::Eps1.id(), Var::Eps2.id()]),
        }
        for i in 0..total.len() {
            vars.extend((0..total[i] as usize).map(|k| Var::Z(i, k).id()));
        }
        let layout = Layout::new(vars)?;
        let denominator = |x: &ShuffleElt| x.poly().terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let (dp, dq) = (denominator(p), denominator(q));
        let one = BigInt::one();
        let mut numerator = IPoly::default();
        for (factors, negate) in terms {
            // every exponent is bounded by the total degree of the product
            let degree: u32 = factors.iter().map(|f| f.degree_in(|_| true).unwrap_or(0)).sum();
            if degree > 255 {
                return None;
            }
            let mut acc = IPoly::from_poly(&factors[0], &layout, &dp)?;
            acc = acc.mul(&IPoly::from_poly(&factors[1], &layout, &dq)?)?;
            for f in &factors[2..] {
                acc = acc.mul(&IPoly::from_poly(f, &layout, &one)?)?;
            }
            if negate {
                acc.neg()?;
            }
            numerator.add_assign(&acc)?;
        }
        for &(i, a, b) in vandermonde {
            let (sa, sb) = (layout.slot(Var::Z(i, a).id())?, layout.slot(Var::Z(i, b).id())?);
            numerator = match numerator.div_linear(sa, sb)? {
                Ok(x) => x,
                Err(()) => {
                    let remainder = numerator.to_poly(&layout).div_linear(Var::Z(i, a).id(), Var::Z(i, b).id()).err();
                    return Some(Err(ShuffleError::NotPolynomial {
                        colour: i,
                        a,
                        b,
                        remainder: Box::new(remainder.unwrap_or_default()),
                    }));
                }
            };
        }
        let scale = BigRational::new(BigInt::one(), dp * dq);
        Some(Ok(numerator.to_poly(&layout).scale(&scale)))
    }

    /// The factors of one summand (relabelled `P`, relabelled `Q`, then linear kernel factors),
    /// multiplied by the full Vandermonde `∏_i ∏_{a<b} (z_{i,a} - z_{i,b})`, and whether the
    /// product must be negated.
    fn shuffle_factors(&self, p: &ShuffleElt, q: &ShuffleElt, shuffle: &Shuffle, total: &DimVector) -> (Vec<Poly>, bool) {
        let n = self.vertices();
        let complement: Shuffle = (0..n)
            .map(|i| (0..total[i] as usize).filter(|k| !shuffle[i].contains(k)).collect())
            .collect();
        let mut factors = vec![relabel(p.poly(), shuffle), relabel(q.poly(), &complement)];
        let z = |i: usize, k: usize| Poly::var(Var::Z(i, k));
        let hbar = match self.mutation {
            KernelMutation::FlipHbarInSameColour => self.hbar().neg(),
            _ => self.hbar(),
        };
        let mut sign_flips = 0usize;
        for i in 0..n {
            let (s, c) = (&shuffle[i], &complement[i]);
            for &a in s {
                for &b in c {
                    factors.push(z(i, a).sub(&z(i, b)).sub(&hbar));
                    if a > b {
                        sign_flips += 1;
                    }
                }
            }
            // 1/∏_{a∈S,b∉S}(z_a - z_b) = ± V(S) V(S^c) / V
            for group in [s, c] {
                for (&a, &b) in group.iter().tuple_combinations() {
                    factors.push(z(i, a).sub(&z(i, b)));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for c in &self.zeta[i][j] {
                    for &a in &shuffle[i] {
                        for &b in &complement[j] {
                            factors.push(z(i, a).sub(&z(j, b)).add(c));
                        }
                    }
                }
            }
        }
        (factors, sign_flips % 2 == 1)
    }

    /// Left-to-right product of a list of elements.
    pub fn product(&self, factors: &[ShuffleElt]) -> Result<ShuffleElt, ShuffleError> {
        factors.iter().try_fold(self.unit(), |acc, f| self.mul(&acc, f))
    }

    /// Two-parameter specialization of an element of the full algebra.
    pub fn specialize(&self, p: &ShuffleElt) -> ShuffleElt {
        let arrows = self.quiver.arrows().len();
        p.map_poly(|poly| {
            poly.substitute(&|v| match Var::from_id(v) {
                Var::Hbar => Some(hbar(Parameters::TwoParameter)),
                Var::Eps(k) if k < arrows => Some(Poly::var(Var::Eps1)),
                _ => None,
            })
        })
    }
}

fn relabel(p: &Poly, slots: &Shuffle) -> Poly {
    p.rename(&|v: VarId| match Var::from_id(v) {
        Var::Z(i, k) => Var::Z(i, slots[i][k]).id(),
        _ => v,
    })
}

fn hbar(params: Parameters) -> Poly {
    match params {
        Parameters::Full => Poly::var(Var::Hbar),
        Parameters::TwoParameter => Poly::var(Var::Eps1).add(&Poly::var(Var::Eps2)),
    }
}

fn eps(params: Parameters, e: DoubledArrow) -> Poly {
    match (params, e.star) {
        (Parameters::Full, false) => Poly::var(Var::Eps(e.arrow)),
        (Parameters::Full, true) => Poly::var(Var::Hbar).sub(&Poly::var(Var::Eps(e.arrow))),
        (Parameters::TwoParameter, false) => Poly::var(Var::Eps1),
        (Parameters::TwoParameter, true) => Poly::var(Var::Eps2),
    }
}

/// Generators of the tautological action on the shuffle algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TautClass {
    /// `p_l(z_i) = Σ_k z_{i,k}^l`, `l ≥ 1`.
    PowerSum { vertex: usize, power: u32 },
    /// `p_0(z_i)`, acting by the dimension `d_i`.
    DegreeCounter { vertex: usize },
}

/// Cap product of a tautological class with a shuffle element.
pub fn taut_action(class: TautClass, p: &ShuffleElt) -> Result<ShuffleElt, ShuffleError> {
    let n = p.weight().len();
    let (vertex, power) = match class {
        TautClass::PowerSum { vertex, power } => (vertex, power),
        TautClass::DegreeCounter { vertex } => (vertex, 0),
    };
    if vertex >= n {
        return Err(ShuffleError::Domain(format!("vertex {vertex} out of range for {n} vertices")));
    }
    let di = p.weight()[vertex];
    if power == 0 {
        return Ok(p.scale(&BigRational::from_integer(di.into())));
    }
    let mut f = Poly::zero();
    for k in 0..di as usize {
        f.add_term(vec![(Var::Z(vertex, k).id(), power)], BigRational::one());
    }
    Ok(p.mul_symmetric(&f))
}
