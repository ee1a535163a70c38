//! The batch verifications behind `qyang verify`.

use loop_env::{
    apply_word, translation_formula, translation_l, verify_identity_a1, FiniteBasis, IdentitySeries, LieEltLoop,
    LoopAlgebra, Sym,
};
use prep_rep::{isomorphism, random_nilpotent, reflect, torsion_membership, Direction, IsoResult, MAX_ISO_DIM};
use quiver_core::{qi, CoweightVector, DimVector, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shuffle::relations::check_matrix;
use shuffle::{twist, twist_iso, ShuffleAlgebra, ShuffleElt, TwistForm};
use weyl_braid::BraidWord;

use crate::{Check, CliError};

/// Every relation instance with mode degrees `≤ modes`.
pub fn relations(q: &Quiver, modes: u32) -> Result<Vec<Check>, CliError> {
    let alg = ShuffleAlgebra::new(q.clone());
    Ok(check_matrix(&alg, modes)?
        .into_iter()
        .map(|c| {
            let w = c.witness.map(|w| w.to_string()).unwrap_or_default();
            Check::new(c.instance.to_string(), c.holds, || w)
        })
        .collect())
}

/// Both `A_1^(1)` series identities, one check per `u^{−n}` coefficient.
pub fn identities(q: &Quiver, order: u32) -> Result<Vec<Check>, CliError> {
    let alg = LoopAlgebra::new(q)?;
    let mut out = vec![];
    for series in [IdentitySeries::H, IdentitySeries::E] {
        let report = verify_identity_a1(q, series, order)?;
        for c in &report.coefficients {
            out.push(Check::new(format!("{series} u^-{}", c.order), c.holds(), || {
                format!("lhs {} rhs {}", c.lhs.display(&alg), c.rhs.display(&alg))
            }));
        }
    }
    Ok(out)
}

/// Non-central basis symbols `x s^k t^ℓ` with `|k| ≤ smax`, `ℓ ≤ tmax`.
pub fn loop_basis(alg: &LoopAlgebra, smax: i64, tmax: u32) -> Vec<Sym> {
    let rs = alg.root_system();
    let mut out = vec![];
    for x in rs.basis() {
        for s in -smax..=smax {
            for t in 0..=tmax {
                out.push(Sym::X { x, s, t });
            }
        }
    }
    out
}

/// Root vectors `E_α s^k` with `|k| ≤ smax`.
pub fn root_vectors(alg: &LoopAlgebra, smax: i64) -> Vec<Sym> {
    loop_basis(alg, smax, 0).into_iter().filter(|s| matches!(s, Sym::X { x: FiniteBasis::Root(_), .. })).collect()
}

/// Braid relations of every pair of vertices on `|s| ≤ 2`, `t ≤ 1`.
pub fn braid_relations(q: &Quiver) -> Result<Vec<Check>, CliError> {
    let alg = LoopAlgebra::new(q)?;
    let cm = q.cartan_matrix();
    let basis = loop_basis(&alg, 2, 1);
    let n = q.num_vertices();
    let mut out = vec![];
    for i in 0..n {
        for j in i + 1..n {
            let (l, r) = match cm[i][j] {
                0 => (BraidWord::positive(&[i, j]), BraidWord::positive(&[j, i])),
                -1 => (BraidWord::positive(&[i, j, i]), BraidWord::positive(&[j, i, j])),
                _ => continue,
            };
            let mut bad = None;
            for s in &basis {
                let v = LieEltLoop::basis(s.clone());
                if apply_word(&alg, &l, &v)? != apply_word(&alg, &r, &v)? {
                    bad = Some(alg.label(s));
                    break;
                }
            }
            out.push(Check::new(format!("braid relation ({i},{j}) {l} = {r}"), bad.is_none(), || {
                format!("differs on {}", bad.clone().unwrap_or_default())
            }));
        }
    }
    Ok(out)
}

/// `L_λ` for `λ = α̌_i` against `x s^n ↦ (−1)^⟨λ,α⟩ x s^{n−⟨λ,α⟩}` on root
/// vectors with `|s| ≤ smax`: the shift (up to sign) and the sign separately.
pub fn translations(q: &Quiver, smax: i64) -> Result<Vec<Check>, CliError> {
    let alg = LoopAlgebra::new(q)?;
    let basis = root_vectors(&alg, smax);
    let mut out = vec![];
    for i in 1..q.num_vertices() {
        let lam = CoweightVector::coroot(q, i);
        let (mut shift, mut sign) = (None, None);
        for s in &basis {
            let v = LieEltLoop::basis(s.clone());
            let got = translation_l(&alg, &lam, &v)?;
            let want = translation_formula(&alg, &lam, &v).expect("root vector");
            if got != want {
                let w = format!("L({}) = {}, formula {}", alg.label(s), alg.display(&got), alg.display(&want));
                if got != want.scale(&qi(-1)) && shift.is_none() {
                    shift = Some(w.clone());
                }
                sign.get_or_insert(w);
            }
        }
        out.push(Check::new(format!("translation shift, λ = coroot {i}"), shift.is_none(), || shift.unwrap_or_default()));
        out.push(Check::new(format!("translation sign, λ = coroot {i}"), sign.is_none(), || sign.unwrap_or_default()));
    }
    Ok(out)
}

pub fn braid(q: &Quiver) -> Result<Vec<Check>, CliError> {
    let mut out = braid_relations(q)?;
    out.extend(translations(q, 3)?);
    Ok(out)
}

/// `s_i(d) = d − (α_i, d) α_i`.
pub fn reflect_dim(q: &Quiver, i: usize, d: &DimVector) -> DimVector {
    let a = q.simple(i);
    let p = q.symmetric_form(&a, d).expect("rank matches");
    d - &a.scale(p)
}

/// `count` seeded random nilpotent modules (entries of `dim` at most 3,
/// total at most [`MAX_ISO_DIM`]) lying in `T^{s_i}`: `S_i` acts on `dim` by
/// `s_i`, keeps nilpotency, and `S_i′ S_i ≅ id`.
pub fn reflections(q: &Quiver, seed: u64, count: usize) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = q.num_vertices();
    let mut out = vec![];
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > 1000 * count {
            out.push(Check::new("sampling", false, || format!("only {} modules in T^{{s_i}} after {tries} draws", out.len())));
            break;
        }
        let d = DimVector((0..n).map(|_| rng.gen_range(0..=3)).collect());
        let i = rng.gen_range(0..n);
        if d.total() == 0 || d.total() as usize > MAX_ISO_DIM {
            continue;
        }
        let m = random_nilpotent(q, &d, &mut rng)?;
        if !torsion_membership(&m, i)?.in_t {
            continue;
        }
        let s = reflect(i, &m, Direction::S)?;
        let back = reflect(i, &s, Direction::SPrime)?;
        let want = reflect_dim(q, i, &d);
        let iso = isomorphism(&back, &m, &mut rng);
        let mut problems = vec![];
        if s.dim() != &want {
            problems.push(format!("dim S_i(M) = {}, expected {want}", s.dim()));
        }
        if !s.is_nilpotent() {
            problems.push("S_i(M) is not nilpotent".into());
        }
        if !matches!(iso, IsoResult::Isomorphic(_)) {
            problems.push(format!("S_i'S_i(M) vs M: {iso:?}"));
        }
        let k = out.len();
        out.push(Check::new(format!("module {k}: dim {d}, vertex {i}"), problems.is_empty(), || problems.join("; ")));
    }
    Ok(out)
}

fn random_monomial(q: &Quiver, rng: &mut ChaCha8Rng) -> Result<ShuffleElt, CliError> {
    let n = q.num_vertices();
    let d: Vec<i64> = loop {
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        if (1..=2).contains(&d.iter().sum::<i64>()) {
            break d;
        }
    };
    let exps: Vec<Vec<u32>> = d.iter().map(|&k| (0..k).map(|_| rng.gen_range(0..3)).collect()).collect();
    Ok(ShuffleElt::monomial_symmetric(DimVector(d), &exps)?)
}

/// The sign change `u_γ ↦ ±u_γ` intertwines the Euler-form twist with the
/// ADE twist on `count` seeded random pairs of monomial symmetric elements.
pub fn twists(q: &Quiver, seed: u64, count: usize) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = ShuffleAlgebra::new(q.clone());
    let (theta, omega) = (TwistForm::ade(q)?, TwistForm::euler(q));
    let mut out = vec![];
    for k in 0..count {
        let (x, y) = (random_monomial(q, &mut rng)?, random_monomial(q, &mut rng)?);
        let f = |p: &ShuffleElt| twist_iso(&theta, &omega, p);
        let lhs = twist(&alg, &theta, &f(&x)?, &f(&y)?)?;
        let rhs = f(&twist(&alg, &omega, &x, &y)?)?;
        out.push(Check::new(format!("pair {k}: {} * {}", x.weight(), y.weight()), lhs == rhs, || {
            format!("{}", lhs.sub(&rhs).map(|d| d.to_string()).unwrap_or_default())
        }));
    }
    Ok(out)
}
