use proptest::prelude::*;
use quiver_core::{find_delta, positive_real_roots, qi, CoweightVector, DimVector, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_braid::{
    a_rotation, braid_l_lambda, braid_l_lambda_with, simple_reflection, translation_element, translation_matrix,
    Automorphism, BraidWord, ExtWeylElt, IntMat, Letter, WeylElt, WeylError,
};

#[test]
fn simple_reflection_examples() {
    let q = Quiver::kronecker();
    let s1 = simple_reflection(&q, 1);
    assert_eq!(s1.apply(&q.simple(1)), DimVector(vec![0, -1]));
    assert_eq!(s1.apply(&q.simple(0)), DimVector(vec![1, 2]));
    assert!(s1.compose(&s1).action.is_identity());
}

#[test]
fn reflections_preserve_form_and_fix_delta() {
    for q in [Quiver::kronecker(), Quiver::affine_a(2), Quiver::affine_d(4), Quiver::affine_e(6)] {
        let aff = find_delta(&q).unwrap();
        let a = q.cartan_matrix();
        for i in 0..q.num_vertices() {
            let s = simple_reflection(&q, i);
            assert!(s.action.preserves_form(&a));
            assert_eq!(s.apply(&aff.delta), aff.delta);
        }
    }
}

#[test]
fn braid_relations_in_weyl_image() {
    for q in [Quiver::affine_a(2), Quiver::affine_a(3), Quiver::affine_d(4), Quiver::finite_a(4)] {
        let a = q.cartan_matrix();
        let n = q.num_vertices();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (si, sj) = (simple_reflection(&q, i), simple_reflection(&q, j));
                if a[i][j] == -1 {
                    assert_eq!(si.compose(&sj).compose(&si), sj.compose(&si).compose(&sj));
                } else if a[i][j] == 0 {
                    assert_eq!(si.compose(&sj), sj.compose(&si));
                }
            }
        }
    }
}

#[test]
fn a2_braid_words_reduce_to_length_three() {
    let q = Quiver::finite_a(2);
    let w1 = WeylElt::from_word(&q, &[0, 1, 0]);
    let w2 = WeylElt::from_word(&q, &[1, 0, 1]);
    assert_eq!(w1, w2);
    assert_eq!(w1.reduced_word().unwrap().len(), 3);
    assert!(WeylElt::identity(&q).reduced_word().unwrap().is_empty());
}

fn inversions(q: &Quiver, w: &WeylElt, height: i64) -> usize {
    positive_real_roots(q, height).iter().filter(|r| w.apply(r).is_nonpos()).count()
}

#[test]
fn length_counts_inversions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [Quiver::kronecker(), Quiver::affine_a(2)] {
        let n = q.num_vertices();
        for _ in 0..60 {
            let len = rng.gen_range(0..=4);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let w = WeylElt::from_word(&q, &word);
            let red = w.reduced_word().unwrap();
            assert_eq!(WeylElt::from_word(&q, &red), w);
            assert_eq!(red.len(), inversions(&q, &w, 10), "word {word:?}");
        }
    }
}

#[test]
fn kronecker_translation_has_length_two() {
    let q = Quiver::kronecker();
    let aff = find_delta(&q).unwrap();
    let coroot = CoweightVector::coroot(&q, 1);
    let t = translation_element(&q, &aff, &coroot, &[]).unwrap();
    assert!(t.auto.is_identity());
    let word = t.weyl.reduced_word().unwrap();
    assert_eq!(word.len(), 2);
    // exhaustive: no shorter word, and exactly the descent output among length-2 words
    let target = translation_matrix(&aff, &coroot).unwrap();
    for len in 0..=2usize {
        for code in 0..(1usize << len) {
            let w: Vec<usize> = (0..len).map(|k| (code >> k) & 1).collect();
            let hit = WeylElt::from_word(&q, &w).action == target;
            assert_eq!(hit, w == word, "{w:?}");
        }
    }
    assert_eq!(word, vec![0, 1]);
    // α_1 ↦ α_1 − 2δ
    assert_eq!(t.apply(&q.simple(1)), DimVector(vec![-2, -1]));
}

#[test]
fn zero_translation_is_identity() {
    let q = Quiver::affine_a(2);
    let aff = find_delta(&q).unwrap();
    let t = translation_element(&q, &aff, &CoweightVector::zero(3), &[]).unwrap();
    assert!(t.action().is_identity());
    assert!(braid_l_lambda(&q, &aff, &CoweightVector::zero(3), &[]).unwrap().is_empty());
}

#[test]
fn coroot_translations_shift_simple_roots() {
    for q in [Quiver::affine_a(2), Quiver::affine_d(4)] {
        let aff = find_delta(&q).unwrap();
        for i in 1..q.num_vertices() {
            let t = translation_element(&q, &aff, &CoweightVector::coroot(&q, i), &[]).unwrap();
            let expect = &q.simple(i) - &aff.delta.scale(2);
            assert_eq!(t.apply(&q.simple(i)), expect);
        }
    }
}

#[test]
fn translations_commute() {
    let q = Quiver::affine_a(2);
    let aff = find_delta(&q).unwrap();
    let rots: Vec<Automorphism> = (0..3).map(|k| a_rotation(&q, k).unwrap()).collect();
    let lams: Vec<CoweightVector> = [(1, 0), (0, 1), (2, -1), (-1, 3)]
        .iter()
        .map(|&(a, b)| aff.coweight_from_finite(&[qi(a), qi(b)]))
        .collect();
    for l in &lams {
        for m in &lams {
            let tl = translation_element(&q, &aff, l, &rots).unwrap();
            let tm = translation_element(&q, &aff, m, &rots).unwrap();
            let sum = translation_element(&q, &aff, &l.add(m), &rots).unwrap();
            assert_eq!(tl.compose(&tm).action(), sum.action());
            assert_eq!(tl.compose(&tm), tm.compose(&tl));
        }
    }
}

#[test]
fn minuscule_translation_needs_rotation() {
    let q = Quiver::affine_a(2);
    let aff = find_delta(&q).unwrap();
    let omega = aff.coweight_from_finite(&[qi(1), qi(0)]);
    match translation_element(&q, &aff, &omega, &[]) {
        Err(WeylError::FactorizationUnavailable { action }) => {
            assert_eq!(action, translation_matrix(&aff, &omega).unwrap())
        }
        other => panic!("unexpected {other:?}"),
    }
    let rots: Vec<Automorphism> = (0..3).map(|k| a_rotation(&q, k).unwrap()).collect();
    let t = translation_element(&q, &aff, &omega, &rots).unwrap();
    assert!(!t.auto.is_identity());
    assert_eq!(t.action(), translation_matrix(&aff, &omega).unwrap());
    let word = t.reduced_word().unwrap();
    assert!(matches!(word.letters()[0], Letter::Auto(_, 1)));
    assert_eq!(word.weyl_image(&q), t.action());
}

#[test]
fn l_lambda_is_independent_of_decomposition() {
    let q = Quiver::affine_a(2);
    let aff = find_delta(&q).unwrap();
    let lam = aff.coweight_from_finite(&[qi(-2), qi(1)]);
    let mu1 = aff.coweight_from_finite(&[qi(2), qi(2)]);
    let mu2 = aff.coweight_from_finite(&[qi(5), qi(2)]);
    let w1 = braid_l_lambda_with(&q, &aff, &lam, &mu1, &[]).unwrap();
    let w2 = braid_l_lambda_with(&q, &aff, &lam, &mu2, &[]).unwrap();
    assert_eq!(w1.weyl_image(&q), w2.weyl_image(&q));
    assert_eq!(w1.weyl_image(&q), translation_matrix(&aff, &lam).unwrap());
    assert_eq!(braid_l_lambda(&q, &aff, &lam, &[]).unwrap().weyl_image(&q), w1.weyl_image(&q));
}

#[test]
fn dominant_l_lambda_is_the_reduced_word() {
    let q = Quiver::kronecker();
    let aff = find_delta(&q).unwrap();
    let lam = CoweightVector::coroot(&q, 1);
    let w = braid_l_lambda(&q, &aff, &lam, &[]).unwrap();
    let t = translation_element(&q, &aff, &lam, &[]).unwrap().reduced_word().unwrap();
    assert_eq!(w, t);
    assert_eq!(w.to_string(), "[1 2]");
}

#[test]
fn free_reduction_is_eager() {
    let mut w = BraidWord::positive(&[0, 1]);
    w.push(Letter::T(1, -1));
    w.push(Letter::T(0, -1));
    assert!(w.is_empty());
    let v = BraidWord::positive(&[2, 0, 1]);
    assert!(v.concat(&v.inverse()).is_empty());
}

fn random_ext(q: &Quiver, rots: &[Automorphism], rng: &mut ChaCha8Rng) -> ExtWeylElt {
    let len = rng.gen_range(0..6);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..q.num_vertices())).collect();
    ExtWeylElt { auto: rots[rng.gen_range(0..rots.len())].clone(), weyl: WeylElt::from_word(q, &word) }
}

#[test]
fn ext_composition_is_associative_and_faithful() {
    let q = Quiver::affine_a(2);
    let rots: Vec<Automorphism> = (0..3).map(|k| a_rotation(&q, k).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, b, c) = (random_ext(&q, &rots, &mut rng), random_ext(&q, &rots, &mut rng), random_ext(&q, &rots, &mut rng));
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&b).action(), a.action().mul(&b.action()));
    }
}

#[test]
fn bad_permutation_rejected() {
    let q = Quiver::affine_d(4);
    assert!(Automorphism::new(&q, "bad", vec![2, 1, 0, 3, 4]).is_err());
    assert!(Automorphism::new(&q, "swap", vec![1, 0, 2, 3, 4]).is_ok());
    assert!(IntMat::permutation(&[1, 0, 2, 3, 4]).as_permutation().is_some());
}

proptest! {
    #[test]
    fn inverse_undoes(word in proptest::collection::vec(0usize..3, 0..7)) {
        let q = Quiver::affine_a(2);
        let w = WeylElt::from_word(&q, &word);
        prop_assert!(w.compose(&w.inverse().unwrap()).action.is_identity());
    }
}
