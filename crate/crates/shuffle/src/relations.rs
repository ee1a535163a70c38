//! Coefficientwise verification of the defining relations of the negative Yangian half
//! inside the shuffle algebra.
//!
//! A relation between generating series `x_i(u) = Σ_l x_{i,l} u^{-l-1}` is stored as a list of
//! terms `p(u, v, ...) · x_{i_1}(u_{s_1}) ⋯ x_{i_k}(u_{s_k})` with `p` a polynomial in the series
//! variables over the coefficient ring. The coefficient of `u^{-r-1} v^{-s-1} ⋯` of such a term
//! is `Σ_a p_a · x_{i_1, r+a_u} ⋯`, so a relation `A •= 0` (equality of coefficients with all
//! exponents negative) is checked at a mode tuple `(r, s, ...)` by a finite sum of shuffle
//! products. Multiplying a `•=` relation by a polynomial keeps it valid, which is why the cubic
//! relation may be tested with its rational prefactors cleared.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::fmt;

use itertools::Itertools;
use quiver_core::{BigRational, DoubledArrow};

use crate::poly::{Poly, Var};
use crate::{ShuffleAlgebra, ShuffleElt, ShuffleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    QuadraticSame,
    QuadraticMixed,
    Cubic,
    Serre,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::QuadraticSame => "quadratic-same",
            RelationKind::QuadraticMixed => "quadratic-mixed",
            RelationKind::Cubic => "cubic",
            RelationKind::Serre => "serre",
        })
    }
}

impl std::str::FromStr for RelationKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quadratic-same" => Ok(RelationKind::QuadraticSame),
            "quadratic-mixed" => Ok(RelationKind::QuadraticMixed),
            "cubic" => Ok(RelationKind::Cubic),
            "serre" => Ok(RelationKind::Serre),
            _ => Err(format!("unknown relation kind `{s}`")),
        }
    }
}

/// One coefficient of one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub kind: RelationKind,
    /// `[i]` for quadratic-same, `[i, j]` otherwise.
    pub indices: Vec<usize>,
    /// Mode degrees, one per series variable (for Serre: `r_1, ..., r_m, s`).
    pub modes: Vec<u32>,
    /// The arrow `e: i -> j` of the cubic relation.
    pub edge: Option<DoubledArrow>,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?} modes {:?}", self.kind, self.indices, self.modes)?;
        if let Some(e) = self.edge {
            write!(f, " edge {}{}", e.arrow, if e.star { "*" } else { "" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub instance: RelationInstance,
    pub holds: bool,
    /// The nonzero left-hand side when the relation fails.
    pub witness: Option<ShuffleElt>,
}

/// A term `prefactor · x_{i_1}(u_{s_1}) ⋯` of a series relation.
#[derive(Debug, Clone)]
struct SeriesTerm {
    prefactor: Poly,
    word: Vec<(usize, usize)>,
}

type Word = Vec<(usize, u32)>;

/// Evaluates relation instances, caching products of generators.
pub struct RelationChecker<'a> {
    alg: &'a ShuffleAlgebra,
    cache: HashMap<Word, Rc<ShuffleElt>>,
    /// Serre sums are symmetric in `r_1, ..., r_m`; keyed by `(i, j, sorted r, s)`.
    serre: HashMap<(usize, usize, Vec<u32>), ShuffleElt>,
}

fn s(k: usize) -> Poly {
    Poly::var(Var::Series(k))
}

impl<'a> RelationChecker<'a> {
    pub fn new(alg: &'a ShuffleAlgebra) -> Self {
        RelationChecker { alg, cache: HashMap::new(), serre: HashMap::new() }
    }

    /// `x_{i_1, l_1} ⋆ ⋯ ⋆ x_{i_k, l_k}`.
    pub fn word(&mut self, w: &[(usize, u32)]) -> Result<Rc<ShuffleElt>, ShuffleError> {
        if let Some(p) = self.cache.get(w) {
            return Ok(p.clone());
        }
        let out = Rc::new(match w.split_last() {
            None => self.alg.unit(),
            Some((&(i, l), rest)) => {
                let prefix = self.word(rest)?;
                self.alg.mul(&prefix, &self.alg.generator(i, l))?
            }
        });
        self.cache.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    fn series_coefficient(&mut self, terms: &[SeriesTerm], modes: &[u32]) -> Result<ShuffleElt, ShuffleError> {
        let weight = terms[0].word.iter().fold(self.alg.quiver().zero(), |acc, &(i, _)| &acc + &self.alg.quiver().simple(i));
        let mut acc = Poly::zero();
        for t in terms {
            // group the prefactor by its exponents in the series variables
            let mut by_shift: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
            for (m, c) in t.prefactor.terms() {
                let mut shift = vec![0u32; modes.len()];
                let mut ring = Vec::new();
                for &(v, e) in m {
                    match Var::from_id(v) {
                        Var::Series(k) => shift[k] += e,
                        _ => ring.push((v, e)),
                    }
                }
                by_shift.entry(shift).or_default().add_term(ring, c.clone());
            }
            for (shift, ring) in by_shift {
                let w: Word = t.word.iter().map(|&(i, slot)| (i, modes[slot] + shift[slot])).collect();
                let prod = self.word(&w)?;
                if ring.len() == 1 && ring.vars().is_empty() {
                    acc.add_scaled_assign(prod.poly(), &ring.constant_term());
                } else {
                    acc.add_assign(&prod.poly().mul(&ring));
                }
            }
        }
        ShuffleElt::new(weight, acc)
    }

    fn validate(&self, inst: &RelationInstance) -> Result<(), ShuffleError> {
        let n = self.alg.vertices();
        let dom = |m: String| Err(ShuffleError::Domain(m));
        let want = if inst.kind == RelationKind::QuadraticSame { 1 } else { 2 };
        if inst.indices.len() != want {
            return dom(format!("{} takes {want} vertex indices", inst.kind));
        }
        if let Some(&v) = inst.indices.iter().find(|&&v| v >= n) {
            return dom(format!("vertex {v} out of range"));
        }
        if want == 2 && inst.indices[0] == inst.indices[1] {
            return dom(format!("{} needs distinct vertices", inst.kind));
        }
        let modes = match inst.kind {
            RelationKind::QuadraticSame | RelationKind::QuadraticMixed => 2,
            RelationKind::Cubic => 3,
            RelationKind::Serre => serre_order(self.alg, inst.indices[0], inst.indices[1]) + 1,
        };
        if inst.modes.len() != modes {
            return dom(format!("{} needs {modes} mode degrees", inst.kind));
        }
        if let Some(e) = inst.edge {
            let q = self.alg.quiver();
            if inst.kind != RelationKind::Cubic {
                return dom("only the cubic relation takes an edge".into());
            }
            if e.arrow >= q.arrows().len() || q.source(e) != inst.indices[0] || q.target(e) != inst.indices[1] {
                return dom(format!("edge is not an arrow {} -> {}", inst.indices[0], inst.indices[1]));
            }
        }
        Ok(())
    }

    /// Evaluates the left-hand side of an instance; zero means the relation holds.
    pub fn evaluate(&mut self, inst: &RelationInstance) -> Result<ShuffleElt, ShuffleError> {
        self.validate(inst)?;
        let alg = self.alg;
        let hbar = alg.hbar();
        match inst.kind {
            RelationKind::QuadraticSame => {
                let i = inst.indices[0];
                let d = s(0).sub(&s(1));
                let terms = [
                    SeriesTerm { prefactor: d.add(&hbar), word: vec![(i, 0), (i, 1)] },
                    SeriesTerm { prefactor: d.sub(&hbar).neg(), word: vec![(i, 1), (i, 0)] },
                ];
                self.series_coefficient(&terms, &inst.modes)
            }
            RelationKind::QuadraticMixed => {
                let (i, j) = (inst.indices[0], inst.indices[1]);
                let d = s(0).sub(&s(1));
                let terms = [
                    SeriesTerm { prefactor: alg.zeta(i, j, &d.sub(&hbar)), word: vec![(i, 0), (j, 1)] },
                    SeriesTerm { prefactor: alg.zeta(i, j, &d).neg(), word: vec![(j, 1), (i, 0)] },
                ];
                self.series_coefficient(&terms, &inst.modes)
            }
            RelationKind::Cubic => {
                let (i, j) = (inst.indices[0], inst.indices[1]);
                let edges = match inst.edge {
                    Some(e) => vec![e],
                    None => alg.quiver().doubled_between(i, j),
                };
                if edges.is_empty() {
                    return Err(ShuffleError::Domain(format!("no arrow {i} -> {j} in the doubled quiver")));
                }
                // the first failing edge, or zero when all hold
                let mut last = None;
                for e in edges {
                    let value = self.series_coefficient(&cubic_terms(alg, i, j, e, CubicSigns::Corrected), &inst.modes)?;
                    if !value.is_zero() {
                        return Ok(value);
                    }
                    last = Some(value);
                }
                Ok(last.expect("nonempty"))
            }
            RelationKind::Serre => {
                let (i, j) = (inst.indices[0], inst.indices[1]);
                let m = inst.modes.len() - 1;
                let mut key = inst.modes.clone();
                key[..m].sort_unstable();
                if let Some(v) = self.serre.get(&(i, j, key.clone())) {
                    return Ok(v.clone());
                }
                let mut acc = Poly::zero();
                for perm in (0..m).permutations(m) {
                    let letters: Vec<(usize, u32)> = perm.iter().map(|&k| (i, inst.modes[k])).collect();
                    for (sign, w) in nested_commutator(&letters, (j, inst.modes[m])) {
                        acc.add_scaled_assign(self.word(&w)?.poly(), &BigRational::from_integer(sign.into()));
                    }
                }
                let weight = &alg.quiver().simple(i).scale(m as i64) + &alg.quiver().simple(j);
                let value = ShuffleElt::new(weight, acc)?;
                self.serre.insert((i, j, key), value.clone());
                Ok(value)
            }
        }
    }

    pub fn check(&mut self, inst: &RelationInstance) -> Result<RelationCheck, ShuffleError> {
        let value = self.evaluate(inst)?;
        let holds = value.is_zero();
        Ok(RelationCheck { instance: inst.clone(), holds, witness: (!holds).then_some(value) })
    }

    /// The cubic relation with the signs exactly as in the usual printed presentation,
    /// `+ UVW + VWU + WUV` after clearing denominators. It does not hold in the shuffle algebra;
    /// see [`cubic_terms`].
    pub fn evaluate_cubic_as_printed(&mut self, e: DoubledArrow, modes: [u32; 3]) -> Result<ShuffleElt, ShuffleError> {
        let q = self.alg.quiver();
        let (i, j) = (q.source(e), q.target(e));
        let terms = cubic_terms(self.alg, i, j, e, CubicSigns::AsPrinted);
        self.series_coefficient(&terms, &modes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CubicSigns {
    Corrected,
    AsPrinted,
}

/// The cubic relation for `e: i -> j`, multiplied by `(v-w-ħ+ε_e)(u-w+ε_e)`:
///
/// ```text
///      (u-w+ε_e)   ζ_{j,i}(w-u) ζ_{j,i}(w-v) · x_i(u) x_i(v) x_j(w)
/// - (-1)^{a_ij} (u-v-ħ) ζ_{i,j}(u-w) ζ_{j,i}(w-v) · x_i(v) x_j(w) x_i(u)
/// -    (v-w-ħ+ε_e) ζ_{i,j}(v-w) ζ_{i,j}(u-w) · x_j(w) x_i(u) x_i(v)   •= 0
/// ```
///
/// Derivation of the signs. Under `x_i(u) ↦ 1/(u - z)`, the part of `c(u,v,w) x_i(u) x_i(v) x_j(w)`
/// with all exponents negative is obtained by substituting for `u, v, w` the shuffle variables
/// they end up attached to. Fix the attachment `u ↦ a`, `v ↦ b` (colour `i`), `w ↦ y` (colour
/// `j`) and put `P = ζ_{ij}(a-y) ζ_{ij}(b-y) ζ_{ji}(y-a) ζ_{ji}(y-b)`. Writing the three
/// prefactors as `x_1 ζ_{ji}ζ_{ji}`, `x_2 ζ_{ij}ζ_{ji}`, `x_3 ζ_{ij}ζ_{ij}` as above, the
/// kernels `ζ_i(a,b) = (a-b-ħ)/(a-b)` and the Euler-form signs (the middle word differs from the
/// outer two by `(-1)^{a_ij}`) give the total
///
/// ```text
/// P/(a-b) · [ (x_1 + x_3)(a-b-ħ) + (-1)^{a_ij} x_2 (a-b+ħ) ]
/// ```
///
/// which vanishes for `x_1 = u-w+ε_e`, `x_3 = -(v-w-ħ+ε_e)`, `x_2 = -(-1)^{a_ij}(u-v-ħ)`.
/// With all three signs `+` the bracket is `(a-b-ħ)(a+b-2y-ħ+2ε_e ± (a-b+ħ))`, nonzero.
fn cubic_terms(alg: &ShuffleAlgebra, i: usize, j: usize, e: DoubledArrow, signs: CubicSigns) -> Vec<SeriesTerm> {
    let (u, v, w) = (s(0), s(1), s(2));
    let hbar = alg.hbar();
    let ee = alg.eps(e);
    let a_ij = alg.quiver().cartan_matrix()[i][j];
    let (s2, s3) = match signs {
        CubicSigns::AsPrinted => (1, 1),
        CubicSigns::Corrected => (if a_ij % 2 == 0 { -1 } else { 1 }, -1),
    };
    let sign = |p: Poly, k: i64| if k < 0 { p.neg() } else { p };
    vec![
        SeriesTerm {
            prefactor: u.sub(&w).add(&ee).mul(&alg.zeta(j, i, &w.sub(&u))).mul(&alg.zeta(j, i, &w.sub(&v))),
            word: vec![(i, 0), (i, 1), (j, 2)],
        },
        SeriesTerm {
            prefactor: sign(u.sub(&v).sub(&hbar).mul(&alg.zeta(i, j, &u.sub(&w))).mul(&alg.zeta(j, i, &w.sub(&v))), s2),
            word: vec![(i, 1), (j, 2), (i, 0)],
        },
        SeriesTerm {
            prefactor: sign(v.sub(&w).sub(&hbar).add(&ee).mul(&alg.zeta(i, j, &v.sub(&w))).mul(&alg.zeta(i, j, &u.sub(&w))), s3),
            word: vec![(j, 2), (i, 0), (i, 1)],
        },
    ]
}

/// `[a_1, [a_2, [⋯, [a_m, y]]]]` expanded into signed words.
fn nested_commutator(letters: &[(usize, u32)], y: (usize, u32)) -> Vec<(i64, Word)> {
    match letters.split_first() {
        None => vec![(1, vec![y])],
        Some((&a, rest)) => {
            let inner = nested_commutator(rest, y);
            let mut out = Vec::with_capacity(2 * inner.len());
            for (sg, w) in &inner {
                let mut left = vec![a];
                left.extend_from_slice(w);
                out.push((*sg, left));
                let mut right = w.clone();
                right.push(a);
                out.push((-sg, right));
            }
            out
        }
    }
}

/// `m = 1 - a_{ij}`.
pub fn serre_order(alg: &ShuffleAlgebra, i: usize, j: usize) -> usize {
    let a = alg.quiver().cartan_matrix()[i][j];
    (1 - a) as usize
}

/// Checks a single instance with a fresh cache.
pub fn check_relation(
    alg: &ShuffleAlgebra,
    kind: RelationKind,
    indices: &[usize],
    modes: &[u32],
    edge: Option<DoubledArrow>,
) -> Result<RelationCheck, ShuffleError> {
    let inst = RelationInstance { kind, indices: indices.to_vec(), modes: modes.to_vec(), edge };
    RelationChecker::new(alg).check(&inst)
}

/// Every relation instance with all mode degrees `≤ max_mode`: quadratic relations for all
/// vertices and ordered pairs, the cubic relation for every arrow of the doubled quiver, and
/// Serre relations for all ordered pairs of distinct vertices.
pub fn relation_matrix(alg: &ShuffleAlgebra, max_mode: u32) -> Vec<RelationInstance> {
    let q = alg.quiver();
    let n = q.num_vertices();
    let tuples = |k: usize| (0..k).map(|_| 0..=max_mode).multi_cartesian_product().collect::<Vec<Vec<u32>>>();
    let mut out = Vec::new();
    for i in 0..n {
        for modes in tuples(2) {
            out.push(RelationInstance { kind: RelationKind::QuadraticSame, indices: vec![i], modes, edge: None });
        }
    }
    for (i, j) in (0..n).cartesian_product(0..n).filter(|(i, j)| i != j) {
        for modes in tuples(2) {
            out.push(RelationInstance { kind: RelationKind::QuadraticMixed, indices: vec![i, j], modes, edge: None });
        }
    }
    for e in q.doubled_arrows() {
        for modes in tuples(3) {
            out.push(RelationInstance { kind: RelationKind::Cubic, indices: vec![q.source(e), q.target(e)], modes, edge: Some(e) });
        }
    }
    for (i, j) in (0..n).cartesian_product(0..n).filter(|(i, j)| i != j) {
        let m = serre_order(alg, i, j);
        for modes in tuples(m + 1) {
            out.push(RelationInstance { kind: RelationKind::Serre, indices: vec![i, j], modes, edge: None });
        }
    }
    out
}

/// Checks every instance of [`relation_matrix`], sharing one product cache.
pub fn check_matrix(alg: &ShuffleAlgebra, max_mode: u32) -> Result<Vec<RelationCheck>, ShuffleError> {
    let mut checker = RelationChecker::new(alg);
    relation_matrix(alg, max_mode).iter().map(|inst| checker.check(inst)).collect()
}

