use num_traits::One;
use proptest::prelude::*;
use quiver_core::{qi, BigRational, DimVector, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shuffle::{taut_action, Poly, ShuffleAlgebra, ShuffleElt, TautClass, Var};

fn z(i: usize, k: usize) -> Poly {
    Poly::var(Var::Z(i, k))
}

fn h() -> Poly {
    Poly::var(Var::Hbar)
}

#[test]
fn a1_two_generators() {
    let alg = ShuffleAlgebra::new(Quiver::single_vertex());
    let (x0, x1) = (alg.generator(0, 0), alg.generator(0, 1));
    let sq = alg.mul(&x0, &x0).unwrap();
    assert_eq!(sq.poly(), &Poly::int(-2));
    let x01 = alg.mul(&x0, &x1).unwrap();
    let x10 = alg.mul(&x1, &x0).unwrap();
    assert_eq!(x01.poly(), &z(0, 0).add(&z(0, 1)).add(&h()).neg());
    assert_eq!(x10.poly(), &z(0, 0).add(&z(0, 1)).sub(&h()).neg());
    // [x_1, x_0] - [x_0, x_1] = -ħ {x_0, x_0}
    let lhs = x10.sub(&x01).unwrap().scale(&qi(2));
    let rhs = sq.scale_ring(&h().scale(&qi(-2))).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn kronecker_single_shuffle() {
    let q = Quiver::kronecker();
    let alg = ShuffleAlgebra::new(q.clone());
    let p = alg.mul(&alg.generator(1, 0), &alg.generator(0, 0)).unwrap();
    let t = z(1, 0).sub(&z(0, 0));
    let expect = t.add(&Poly::var(Var::Eps(0))).mul(&t.add(&Poly::var(Var::Eps(1))));
    assert_eq!(p.poly(), &expect);
    assert_eq!(q.euler_form(&q.simple(1), &q.simple(0)).unwrap(), -2);
}

#[test]
fn unit_is_two_sided() {
    let alg = ShuffleAlgebra::new(Quiver::affine_a(2));
    let p = alg.product(&[alg.generator(0, 1), alg.generator(2, 0)]).unwrap();
    assert_eq!(alg.mul(&alg.unit(), &p).unwrap(), p);
    assert_eq!(alg.mul(&p, &alg.unit()).unwrap(), p);
}

#[test]
fn generator_degree() {
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    let g = alg.generator(1, 3);
    assert_eq!(g.weight(), &DimVector(vec![0, 1]));
    // x_{i,l} has cohomological degree 2l, i.e. q-degree -2l
    assert_eq!(g.poly().degree_in(|_| true), Some(3));
    assert!(alg.generator(0, 0).poly() == &Poly::one());
}

fn random_generator(alg: &ShuffleAlgebra, rng: &mut ChaCha8Rng, max_mode: u32) -> ShuffleElt {
    let i = rng.gen_range(0..alg.vertices());
    alg.generator(i, rng.gen_range(0..=max_mode))
}

#[test]
fn associativity_on_generator_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in [Quiver::kronecker(), Quiver::affine_a(2), Quiver::single_vertex()] {
        let alg = ShuffleAlgebra::new(q);
        for _ in 0..50 {
            let (a, b, c) = (random_generator(&alg, &mut rng, 3), random_generator(&alg, &mut rng, 3), random_generator(&alg, &mut rng, 3));
            let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
            let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right, "({a}) ({b}) ({c})");
        }
    }
}

#[test]
fn packed_path_agrees_with_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    for _ in 0..20 {
        let p = alg.product(&[random_generator(&alg, &mut rng, 2), random_generator(&alg, &mut rng, 2)]).unwrap();
        let p = p.scale(&BigRational::new(1.into(), 3.into()));
        let q = random_generator(&alg, &mut rng, 3);
        assert_eq!(alg.unsigned_mul(&p, &q).unwrap(), alg.unsigned_mul_reference(&p, &q).unwrap());
    }
}

#[test]
fn tautological_action_examples() {
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    let p1 = TautClass::PowerSum { vertex: 0, power: 1 };
    assert_eq!(taut_action(p1, &alg.generator(0, 0)).unwrap(), alg.generator(0, 1));
    assert!(taut_action(p1, &alg.generator(1, 2)).unwrap().is_zero());
    let x = alg.mul(&alg.generator(0, 0), &alg.generator(0, 1)).unwrap();
    assert_eq!(taut_action(TautClass::DegreeCounter { vertex: 0 }, &x).unwrap(), x.scale(&qi(2)));
}

#[test]
fn tautological_action_is_a_derivation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    for _ in 0..20 {
        let i = rng.gen_range(0..2);
        let p1 = TautClass::PowerSum { vertex: i, power: 1 };
        let pick = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(1..=2);
            let gens: Vec<_> = (0..n).map(|_| alg.generator(i, rng.gen_range(0..3))).collect();
            alg.product(&gens).unwrap()
        };
        let (p, q) = (pick(&mut rng), pick(&mut rng));
        let lhs = taut_action(p1, &alg.mul(&p, &q).unwrap()).unwrap();
        let rhs = alg
            .mul(&taut_action(p1, &p).unwrap(), &q)
            .unwrap()
            .add(&alg.mul(&p, &taut_action(p1, &q).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn specialization_commutes_with_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [Quiver::kronecker(), Quiver::affine_a(2)] {
        let full = ShuffleAlgebra::new(q.clone());
        let two = ShuffleAlgebra::two_parameter(q);
        for _ in 0..15 {
            let p = full.product(&[random_generator(&full, &mut rng, 2), random_generator(&full, &mut rng, 2)]).unwrap();
            let r = random_generator(&full, &mut rng, 2);
            let lhs = full.specialize(&full.mul(&p, &r).unwrap());
            let rhs = two.mul(&full.specialize(&p), &full.specialize(&r)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn text_roundtrip_and_errors() {
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    let p = alg
        .product(&[alg.generator(0, 1), alg.generator(1, 0), alg.generator(0, 2)])
        .unwrap()
        .scale(&BigRational::new((-5).into(), 7.into()));
    let text = p.to_text();
    assert_eq!(ShuffleElt::from_text(&text).unwrap(), p);
    assert_eq!(ShuffleElt::from_text(&text).unwrap().to_text(), text);
    assert!(ShuffleElt::from_text("weight 2\n1 z0_1^1\n").is_err(), "not symmetric");
    assert!(ShuffleElt::from_text("weight 1\n1 z0_2^1\n").is_err(), "stray variable");
    assert!(ShuffleElt::from_text("weight 1\nx\n").is_err());
}

#[test]
fn monomial_symmetric_elements() {
    let w = DimVector(vec![2, 1]);
    let m = ShuffleElt::monomial_symmetric(w, &[vec![2, 0], vec![1]]).unwrap();
    let expect = z(0, 0).pow(2).add(&z(0, 1).pow(2)).mul(&z(1, 0));
    assert_eq!(m.poly(), &expect);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn products_are_symmetric_and_graded(a in 0u32..3, b in 0u32..3, c in 0u32..3, i in 0usize..2, j in 0usize..2) {
        let alg = ShuffleAlgebra::new(Quiver::kronecker());
        let p = alg.product(&[alg.generator(i, a), alg.generator(j, b), alg.generator(i, c)]).unwrap();
        // the constructor re-validates symmetry
        prop_assert_eq!(ShuffleElt::new(p.weight().clone(), p.poly().clone()).unwrap(), p.clone());
        let mut w = vec![0i64; 2];
        w[i] += 2;
        w[j] += 1;
        prop_assert_eq!(p.weight(), &DimVector(w));
    }

    #[test]
    fn a1_quadratic_coefficient_identity(r in 0u32..4, s in 0u32..4) {
        // [x_{r+1}, x_s] - [x_r, x_{s+1}] = -ħ {x_r, x_s}
        let alg = ShuffleAlgebra::new(Quiver::single_vertex());
        let x = |l| alg.generator(0, l);
        let m = |a: &ShuffleElt, b: &ShuffleElt| alg.mul(a, b).unwrap();
        let comm = |a, b| m(&x(a), &x(b)).sub(&m(&x(b), &x(a))).unwrap();
        let lhs = comm(r + 1, s).sub(&comm(r, s + 1)).unwrap();
        let anti = m(&x(r), &x(s)).add(&m(&x(s), &x(r))).unwrap();
        prop_assert_eq!(lhs, anti.scale_ring(&h().neg()).unwrap());
    }
}

#[test]
fn scalar_one_is_neutral() {
    let alg = ShuffleAlgebra::new(Quiver::single_vertex());
    let g = alg.generator(0, 2);
    assert_eq!(g.scale(&BigRational::one()), g);
}
