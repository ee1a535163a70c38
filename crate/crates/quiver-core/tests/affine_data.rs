use std::collections::BTreeSet;

use proptest::prelude::*;
use quiver_core::{find_delta, kac_polynomial, positive_roots_bfs, slope, CoweightVector, DimVector, Quiver};

fn family() -> Vec<Quiver> {
    vec![Quiver::affine_a(1), Quiver::affine_a(2), Quiver::affine_a(3), Quiver::affine_d(4)]
}

#[test]
fn kronecker_euler_values() {
    let q = Quiver::kronecker();
    let (a0, a1) = (q.simple(0), q.simple(1));
    assert_eq!(q.euler_form(&a1, &a0).unwrap(), -2);
    assert_eq!(q.euler_form(&a0, &a1).unwrap(), 0);
    assert!(q.euler_form(&a0, &DimVector(vec![1])).is_err());
}

#[test]
fn diagonal_euler_is_one_and_cartan_is_symmetric() {
    for q in family().into_iter().chain([Quiver::affine_e(6), Quiver::single_vertex()]) {
        let a = q.cartan_matrix();
        for i in 0..q.num_vertices() {
            assert_eq!(q.euler_form(&q.simple(i), &q.simple(i)).unwrap(), 1);
            assert_eq!(a[i][i], 2);
            for j in 0..q.num_vertices() {
                assert_eq!(a[i][j], a[j][i]);
                assert_eq!(a[i][j], q.symmetric_form(&q.simple(i), &q.simple(j)).unwrap());
                if i != j {
                    assert!(a[i][j] <= 0);
                }
            }
        }
    }
}

#[test]
fn delta_examples() {
    let a2 = find_delta(&Quiver::affine_a(2)).unwrap();
    assert_eq!(a2.delta, DimVector(vec![1, 1, 1]));
    assert_eq!(a2.coxeter, 3);
    for n in 1..6 {
        assert_eq!(find_delta(&Quiver::affine_a(n)).unwrap().coxeter, n as i64 + 1);
    }
    for n in 4..8 {
        assert_eq!(find_delta(&Quiver::affine_d(n)).unwrap().coxeter, 2 * n as i64 - 2);
    }
    let e8 = find_delta(&Quiver::affine_e(8)).unwrap();
    assert_eq!(e8.coxeter, 30);
    assert_eq!(&e8.highest_root + &DimVector::simple(9, 0), e8.delta);
    assert_eq!(CoweightVector::rho(9).pair_int(&e8.delta), 30);
}

/// Every d in ℕI with all entries <= bound.
fn box_vectors(n: usize, bound: i64) -> Vec<DimVector> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(DimVector).collect()
}

#[test]
fn kac_support_matches_root_enumeration() {
    for q in family() {
        let aff = find_delta(&q).unwrap();
        let n = q.num_vertices();
        let height = if n <= 3 { 8 } else { 6 };
        let roots: BTreeSet<DimVector> = positive_roots_bfs(&q, &aff.delta, height).into_iter().collect();
        for d in box_vectors(n, height) {
            if d.is_zero() || d.total() > height {
                continue;
            }
            let kac = kac_polynomial(&q, &aff, &d).unwrap();
            let dd = q.symmetric_form(&d, &d).unwrap();
            assert_eq!(!kac.is_zero(), roots.contains(&d), "{d} in {:?}", q.kind());
            if !kac.is_zero() {
                assert!(dd <= 2);
            }
        }
    }
}

#[test]
fn kac_examples() {
    let q = Quiver::kronecker();
    let aff = find_delta(&q).unwrap();
    assert_eq!(kac_polynomial(&q, &aff, &q.simple(1)).unwrap().0, vec![1]);
    assert_eq!(kac_polynomial(&q, &aff, &aff.delta).unwrap().0, vec![1, 1]);
    // α_0 + 2α_1 is a real root of the Kronecker quiver
    assert_eq!(kac_polynomial(&q, &aff, &DimVector(vec![1, 2])).unwrap().0, vec![1]);
    assert!(kac_polynomial(&q, &aff, &DimVector(vec![1, 3])).unwrap().is_zero());
    let a2 = Quiver::affine_a(2);
    let aff2 = find_delta(&a2).unwrap();
    assert_eq!(kac_polynomial(&a2, &aff2, &DimVector(vec![2, 2, 2])).unwrap().0, vec![2, 1]);
}

proptest! {
    #[test]
    fn delta_is_radical(which in 0usize..4, d in proptest::collection::vec(-20i64..20, 5)) {
        let q = &family()[which];
        let aff = find_delta(q).unwrap();
        let d = DimVector(d[..q.num_vertices()].to_vec());
        prop_assert_eq!(q.symmetric_form(&aff.delta, &d).unwrap(), 0);
        prop_assert!(aff.delta.iter().all(|&x| x > 0));
    }

    #[test]
    fn slope_scale_invariant(d in proptest::collection::vec(0i64..10, 3), k in 1i64..6, t in proptest::collection::vec(-5i64..5, 2)) {
        prop_assume!(d.iter().sum::<i64>() > 0);
        let aff = find_delta(&Quiver::affine_a(2)).unwrap();
        let theta = aff.coweight_from_finite(&[quiver_core::qi(t[0]), quiver_core::qi(t[1])]);
        let d = DimVector(d);
        prop_assert_eq!(slope(&theta, &d).unwrap(), slope(&theta, &d.scale(k)).unwrap());
        prop_assert_eq!(slope(&CoweightVector::zero(3), &d).unwrap(), quiver_core::qi(0));
    }
}
