mod common;

use common::{basis, elt};
use loop_env::*;
use proptest::prelude::*;
use quiver_core::{qi, CoweightVector, DimVector, Quiver};
use series::{coha_character, TruncationWindow};

fn kronecker() -> LoopAlgebra {
    LoopAlgebra::new(&Quiver::kronecker()).unwrap()
}

#[test]
fn straightening_example() {
    let alg = kronecker();
    // θ = (1, −1) puts f before e s⁻¹
    let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, CoweightVector::from_ints(&[1, -1])).unwrap());
    let es = alg.root(&[1], -1, 0);
    let f = alg.root(&[-1], 0, 0);
    let hs = alg.cartan(1, -1, 0);
    assert_eq!(pbw.cmp(&f, &es), std::cmp::Ordering::Less);
    let x = pbw.normalize(&EnvElt::monomial(vec![es.clone(), f.clone()])).unwrap();
    let mut expected = EnvElt::monomial(vec![f, es]);
    expected.add_term(vec![hs], qi(1));
    assert_eq!(x, expected);
}

#[test]
fn normal_monomials_are_fixed() {
    let alg = kronecker();
    let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, PbwOrder::standard_theta(&alg)).unwrap());
    let mut syms = basis(&alg, 1, 1);
    syms.sort_by(|a, b| pbw.cmp(a, b));
    let m: Vec<Sym> = syms.into_iter().step_by(3).collect();
    assert!(pbw.is_normal(&m));
    let x = EnvElt::monomial(m);
    assert_eq!(pbw.normalize(&x).unwrap(), x);
}

#[test]
fn cap_reports_truncation() {
    let alg = kronecker();
    let pbw = Pbw::with_cap(&alg, PbwOrder::slope(&alg, PbwOrder::standard_theta(&alg)).unwrap(), 2);
    let xs: Vec<LieEltLoop> = [1, -1, 2, -2, 0].iter().map(|&s| elt(&alg.root(&[1], s, 0))).collect();
    let ys: Vec<LieEltLoop> = [1, -1, 2, -2, 0].iter().map(|&s| elt(&alg.root(&[-1], s, 0))).collect();
    let factors: Vec<LieEltLoop> = xs.into_iter().chain(ys).rev().collect();
    assert!(matches!(pbw.product(&factors), Err(LoopError::Truncation { .. })));
}

#[test]
fn text_roundtrip_and_divided_powers() {
    let alg = kronecker();
    let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, PbwOrder::standard_theta(&alg)).unwrap());
    let f = elt(&alg.root(&[-1], -1, 0));
    let e = elt(&alg.root(&[1], -2, 1));
    let x = pbw.product(&[e.clone(), f.clone(), e.clone()]).unwrap();
    assert_eq!(EnvElt::from_text(&alg, &x.to_text(&alg)).unwrap(), x);
    let f2 = pbw.product(&[f.clone(), f.clone()]).unwrap().scale(&quiver_core::q(1, 2));
    assert_eq!(divided_power(&pbw, &f, 2).unwrap(), f2);
    assert_eq!(divided_power(&pbw, &f, 0).unwrap(), EnvElt::one());
}

fn a2() -> LoopAlgebra {
    LoopAlgebra::new(&Quiver::affine_a(2)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn commutator_is_the_bracket(i in 0usize..1000, j in 0usize..1000) {
        let alg = a2();
        let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, PbwOrder::standard_theta(&alg)).unwrap());
        let b = basis(&alg, 2, 1);
        let (x, y) = (elt(&b[i % b.len()]), elt(&b[j % b.len()]));
        let lhs = pbw.product(&[x.clone(), y.clone()]).unwrap().sub(&pbw.product(&[y.clone(), x.clone()]).unwrap());
        prop_assert_eq!(lhs, EnvElt::from_lie(&alg.bracket(&x, &y)));
    }

    #[test]
    fn product_is_associative(picks in proptest::collection::vec(0usize..1000, 3)) {
        let alg = kronecker();
        let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, PbwOrder::standard_theta(&alg)).unwrap());
        let b = basis(&alg, 2, 1);
        let x: Vec<EnvElt> = picks.iter().map(|p| EnvElt::from_lie(&elt(&b[p % b.len()]))).collect();
        let left = pbw.mul(&pbw.mul(&x[0], &x[1]).unwrap(), &x[2]).unwrap();
        let right = pbw.mul(&x[0], &pbw.mul(&x[1], &x[2]).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(pbw.normalize(&left).unwrap(), left);
    }
}

fn counts_match(q: &Quiver, max_total: i64, max_k: i64) {
    let alg = LoopAlgebra::new(q).unwrap();
    let window = TruncationWindow::total(q.num_vertices(), max_total, max_k);
    let counts = pbw_counts(&alg, &window);
    let chi = coha_character(q, &window, 0).unwrap();
    for d in window.weights() {
        for m in 0..=max_k {
            let n = counts.get(&(d.clone(), m)).cloned().unwrap_or_default();
            assert_eq!(qi(0) + quiver_core::BigRational::from_integer(n), chi.coeff(&d, -m), "d = {d}, t-degree {m}");
        }
    }
}

#[test]
fn pbw_counts_match_character_a1_affine() {
    counts_match(&Quiver::kronecker(), 5, 3);
}

#[test]
fn pbw_counts_match_character_a2_affine() {
    counts_match(&Quiver::affine_a(2), 3, 2);
}

#[test]
fn n_ell_basis_low_degrees() {
    let alg = kronecker();
    let window = TruncationWindow::total(2, 2, 1);
    let b = n_ell_basis(&alg, &window);
    // degree δ: e s⁻¹, f s⁻¹... only weight −δ symbols: h s⁻¹ t^m and c_{−1,m}
    let delta: Vec<&Sym> = b.iter().filter(|s| alg.weight(s) == DimVector::from_slice(&[-1, -1])).collect();
    // h s⁻¹ t⁰, h s⁻¹ t¹, c_{−1,1}
    assert_eq!(delta.len(), 3);
}
