mod common;

use common::{basis, elt, root_vectors};
use loop_env::*;
use proptest::prelude::*;
use quiver_core::{qi, CoweightVector, DimVector, Quiver};
use weyl_braid::BraidWord;

fn t(alg: &LoopAlgebra, i: usize, v: &LieEltLoop) -> LieEltLoop {
    braid_t(alg, i, false, v).unwrap()
}

#[test]
fn sl2_adjoint() {
    let alg = LoopAlgebra::new(&Quiver::kronecker()).unwrap();
    let e = elt(&alg.root(&[1], 0, 0));
    let f = elt(&alg.root(&[-1], 0, 0));
    let h = elt(&alg.cartan(1, 0, 0));
    assert_eq!(t(&alg, 1, &e), f.scale(&qi(-1)));
    assert_eq!(t(&alg, 1, &f), e.scale(&qi(-1)));
    assert_eq!(t(&alg, 1, &h), h.scale(&qi(-1)));
}

#[test]
fn weights_transform_by_reflections() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let q = alg.quiver();
    for i in 0..3 {
        let ai = DimVector::simple(3, i);
        for s in basis(&alg, 2, 1) {
            let w = alg.weight(&s);
            let reflected = &w - &ai.scale(q.symmetric_form(&ai, &w).unwrap());
            for (u, _) in t(&alg, i, &elt(&s)).terms() {
                if !u.is_central() {
                    assert_eq!(alg.weight(u), reflected);
                }
            }
        }
    }
}

#[test]
fn inverse_and_square() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let q = alg.quiver();
    for i in 0..3 {
        let ai = DimVector::simple(3, i);
        for s in basis(&alg, 2, 1) {
            let v = elt(&s);
            assert_eq!(braid_t(&alg, i, true, &t(&alg, i, &v)).unwrap(), v);
            // T_i² acts on a weight space by (−1)^{(α_i, weight)}, up to central terms
            let sq = t(&alg, i, &t(&alg, i, &v));
            let sign = if q.symmetric_form(&ai, &alg.weight(&s)).unwrap() % 2 == 0 { 1 } else { -1 };
            let noncentral = sq.terms().filter(|(u, _)| !u.is_central()).fold(LieEltLoop::zero(), |mut acc, (u, c)| {
                acc.add_term(u.clone(), c.clone());
                acc
            });
            assert_eq!(noncentral, v.scale(&qi(sign)));
        }
    }
}

fn braid_relations(q: &Quiver) {
    let alg = LoopAlgebra::new(q).unwrap();
    let cm = q.cartan_matrix();
    let b = basis(&alg, 2, 1);
    let n = alg.vertices();
    for i in 0..n {
        for j in i + 1..n {
            let (l, r) = match cm[i][j] {
                0 => (BraidWord::positive(&[i, j]), BraidWord::positive(&[j, i])),
                -1 => (BraidWord::positive(&[i, j, i]), BraidWord::positive(&[j, i, j])),
                _ => continue,
            };
            for s in &b {
                let v = elt(s);
                assert_eq!(apply_word(&alg, &l, &v).unwrap(), apply_word(&alg, &r, &v).unwrap(), "{i},{j} on {}", alg.label(s));
            }
        }
    }
}

#[test]
fn braid_relations_a2_affine() {
    braid_relations(&Quiver::affine_a(2));
}

#[test]
fn braid_relations_d4_affine() {
    braid_relations(&Quiver::affine_d(4));
}

#[test]
fn automorphism_words_reject_diagram_letters() {
    let alg = LoopAlgebra::new(&Quiver::kronecker()).unwrap();
    let aut = weyl_braid::Automorphism::new(alg.quiver(), "swap", vec![1, 0]).unwrap();
    let mut w = BraidWord::new();
    w.push(weyl_braid::Letter::Auto(aut, 1));
    assert!(matches!(apply_word(&alg, &w, &alg.chevalley(1, true, 0)), Err(LoopError::Domain(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn braid_operators_are_automorphisms(i in 0usize..3, a in 0usize..1000, b in 0usize..1000) {
        let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
        let basis = basis(&alg, 2, 2);
        let (x, y) = (elt(&basis[a % basis.len()]), elt(&basis[b % basis.len()]));
        let lhs = t(&alg, i, &alg.bracket(&x, &y));
        let rhs = alg.bracket(&t(&alg, i, &x), &t(&alg, i, &y));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn translation_a1_affine() {
    let alg = LoopAlgebra::new(&Quiver::kronecker()).unwrap();
    let lam = CoweightVector::coroot(alg.quiver(), 1);
    for s in root_vectors(&alg, 3) {
        let v = elt(&s);
        assert_eq!(translation_l(&alg, &lam, &v).unwrap(), translation_formula(&alg, &lam, &v).unwrap());
    }
    for n in -3..=3 {
        let e = elt(&alg.root(&[1], n, 0));
        assert_eq!(translation_l(&alg, &lam, &e).unwrap(), elt(&alg.root(&[1], n - 2, 0)));
        let f = elt(&alg.root(&[-1], n, 1));
        assert_eq!(translation_l(&alg, &lam, &f).unwrap(), elt(&alg.root(&[-1], n + 2, 1)));
        let h = elt(&alg.cartan(1, n, 0));
        let image = translation_l(&alg, &lam, &h).unwrap();
        if n == 0 {
            // the constant loop picks up the central shift −(λ, α̌)·c_0
            assert_eq!(image, h.sub(&elt(&Sym::C { l: 0 }).scale(&qi(2))));
        } else {
            assert_eq!(image, h);
        }
    }
}

#[test]
fn translation_by_zero_is_identity() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let zero = CoweightVector::zero(3);
    for s in basis(&alg, 2, 1) {
        assert_eq!(translation_l(&alg, &zero, &elt(&s)).unwrap(), elt(&s));
    }
}

#[test]
fn translation_a2_affine_shift() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    for i in 1..3 {
        let lam = CoweightVector::coroot(alg.quiver(), i);
        for s in root_vectors(&alg, 3) {
            let v = elt(&s);
            let l = translation_l(&alg, &lam, &v).unwrap();
            let f = translation_formula(&alg, &lam, &v).unwrap();
            assert!(l == f || l == f.scale(&qi(-1)), "{}", alg.label(&s));
        }
    }
    // λ = α̌_2: the closed form holds with its sign
    let lam = CoweightVector::coroot(alg.quiver(), 2);
    for s in root_vectors(&alg, 3) {
        assert_eq!(translation_l(&alg, &lam, &elt(&s)).unwrap(), translation_formula(&alg, &lam, &elt(&s)).unwrap());
    }
    for n in -3..=3 {
        let v = elt(&alg.root(&[1, 0], n, 0));
        assert_eq!(translation_l(&alg, &lam, &v).unwrap(), elt(&alg.root(&[1, 0], n + 1, 0)).scale(&qi(-1)));
    }
}

#[test]
fn translation_a2_first_coroot_sign() {
    // The diagram symmetry exchanging vertices 1 and 2 negates E_{−φ}, so the
    // uniform sign (−1)^⟨λ,α⟩ can hold for only one of α̌_1, α̌_2.
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let lam = CoweightVector::coroot(alg.quiver(), 1);
    for n in -3..=3 {
        let e1 = elt(&alg.root(&[1, 0], n, 0));
        assert_eq!(translation_l(&alg, &lam, &e1).unwrap(), elt(&alg.root(&[1, 0], n - 2, 0)));
        let e2 = elt(&alg.root(&[0, 1], n, 0));
        assert_eq!(translation_l(&alg, &lam, &e2).unwrap(), elt(&alg.root(&[0, 1], n + 1, 0)));
    }
}

#[test]
fn translations_commute_and_add() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let (l1, l2) = (CoweightVector::coroot(alg.quiver(), 1), CoweightVector::coroot(alg.quiver(), 2));
    for s in basis(&alg, 1, 0) {
        let v = elt(&s);
        let a = translation_l(&alg, &l1, &translation_l(&alg, &l2, &v).unwrap()).unwrap();
        let b = translation_l(&alg, &l2, &translation_l(&alg, &l1, &v).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, translation_l(&alg, &l1.add(&l2), &v).unwrap());
    }
}

fn slope_pbw(alg: &LoopAlgebra) -> Pbw<'_> {
    Pbw::new(alg, PbwOrder::slope(alg, PbwOrder::standard_theta(alg)).unwrap())
}

#[test]
fn truncated_braid_commuting_vertices() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(3)).unwrap();
    let pbw = slope_pbw(&alg);
    let x3 = EnvElt::from_lie(&alg.chevalley(3, false, 0));
    assert_eq!(truncated_braid(&pbw, 1, &x3).unwrap(), x3);
    let positive = EnvElt::from_lie(&alg.chevalley(1, true, 0));
    assert!(matches!(truncated_braid(&pbw, 1, &positive), Err(LoopError::Domain(_))));
}

#[test]
fn truncated_translation_lsl2() {
    let alg = LoopAlgebra::new(&Quiver::kronecker()).unwrap();
    let pbw = slope_pbw(&alg);
    let lam = CoweightVector::coroot(alg.quiver(), 1);
    let word = weyl_braid::braid_l_lambda(alg.quiver(), alg.affine(), &lam, &[]).unwrap();
    assert_eq!(word, BraidWord::positive(&[0, 1]));
    let f = |n: i64| LieEltLoop::basis(alg.root(&[-1], -n, 0));
    let mut hits = 0;
    for a in 0..4 {
        for b in a..4 {
            let x = pbw.product(&[f(a), f(b)]).unwrap();
            let lhs = truncated_braid_word(&pbw, &[0, 1], &x).unwrap();
            let full = apply_to_env(&pbw, &x, |v| translation_l(&alg, &lam, v)).unwrap();
            assert_eq!(lhs, project_negative(&pbw, &full).unwrap());
            hits += usize::from(!lhs.is_zero());
        }
    }
    assert!(hits > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn truncated_braids_form_a_monoid(i in 0usize..3, d in 1usize..3, picks in proptest::collection::vec(0usize..1000, 1..4)) {
        let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
        let pbw = slope_pbw(&alg);
        let j = (i + d) % 3;
        let neg: Vec<Sym> = basis(&alg, 2, 0).into_iter().filter(|s| alg.is_negative(s)).collect();
        let factors: Vec<LieEltLoop> = picks.iter().map(|p| elt(&neg[p % neg.len()])).collect();
        let x = pbw.product(&factors).unwrap();
        let composite = project_negative(&pbw, &apply_to_env(&pbw, &x, |v| apply_word(&alg, &BraidWord::positive(&[i, j]), v)).unwrap()).unwrap();
        let stepwise = truncated_braid(&pbw, i, &truncated_braid(&pbw, j, &x).unwrap()).unwrap();
        prop_assert_eq!(composite, stepwise);
    }
}
