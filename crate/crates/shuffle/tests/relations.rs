use quiver_core::{DoubledArrow, Quiver};
use shuffle::relations::{check_matrix, check_relation, serre_order, RelationChecker, RelationKind};
use shuffle::{KernelMutation, ShuffleAlgebra, ShuffleError};

#[test]
fn quadratic_same_low_modes() {
    let alg = ShuffleAlgebra::new(Quiver::single_vertex());
    for modes in [[0, 0], [1, 0], [2, 1]] {
        assert!(check_relation(&alg, RelationKind::QuadraticSame, &[0], &modes, None).unwrap().holds);
    }
}

#[test]
fn kronecker_serre_at_mode_zero() {
    let alg = ShuffleAlgebra::new(Quiver::kronecker());
    assert_eq!(serre_order(&alg, 0, 1), 3);
    for (i, j) in [(0, 1), (1, 0)] {
        let r = check_relation(&alg, RelationKind::Serre, &[i, j], &[0, 0, 0, 0], None).unwrap();
        assert!(r.holds);
    }
}

#[test]
fn kronecker_cubic_for_each_edge() {
    let q = Quiver::kronecker();
    let alg = ShuffleAlgebra::new(q.clone());
    for e in q.doubled_arrows() {
        let (i, j) = (q.source(e), q.target(e));
        let r = check_relation(&alg, RelationKind::Cubic, &[i, j], &[0, 0, 0], Some(e)).unwrap();
        assert!(r.holds, "edge {}", q.label(e));
    }
}

#[test]
fn cubic_signs_as_printed_fail() {
    for q in [Quiver::kronecker(), Quiver::affine_a(2)] {
        let alg = ShuffleAlgebra::new(q.clone());
        let mut checker = RelationChecker::new(&alg);
        for e in q.doubled_arrows() {
            assert!(!checker.evaluate_cubic_as_printed(e, [0, 0, 0]).unwrap().is_zero());
        }
    }
}

#[test]
fn domain_errors() {
    let q = Quiver::kronecker();
    let alg = ShuffleAlgebra::new(q);
    let cubic_same = check_relation(&alg, RelationKind::Cubic, &[0, 0], &[0, 0, 0], None);
    assert!(matches!(cubic_same, Err(ShuffleError::Domain(_))));
    let wrong_edge = check_relation(&alg, RelationKind::Cubic, &[0, 1], &[0, 0, 0], Some(DoubledArrow::new(0, false)));
    assert!(matches!(wrong_edge, Err(ShuffleError::Domain(_))), "x goes 1 -> 0");
    let wrong_arity = check_relation(&alg, RelationKind::Serre, &[0, 1], &[0, 0], None);
    assert!(matches!(wrong_arity, Err(ShuffleError::Domain(_))));
}

#[test]
fn a2_affine_matrix_holds() {
    let alg = ShuffleAlgebra::new(Quiver::affine_a(2));
    let checks = check_matrix(&alg, 2).unwrap();
    assert_eq!(checks.len(), 405);
    let failing: Vec<_> = checks.iter().filter(|c| !c.holds).map(|c| c.instance.to_string()).collect();
    assert!(failing.is_empty(), "{failing:?}");
}

#[test]
fn flipping_hbar_in_the_same_colour_kernel_breaks_relations() {
    let alg = ShuffleAlgebra::with_mutation(Quiver::single_vertex(), KernelMutation::FlipHbarInSameColour);
    let r = check_relation(&alg, RelationKind::QuadraticSame, &[0], &[0, 0], None).unwrap();
    assert!(!r.holds);
    assert!(r.witness.is_some());
}

#[test]
fn flipping_any_edge_sign_breaks_a_relation() {
    for q in [Quiver::kronecker(), Quiver::affine_a(2)] {
        for e in q.doubled_arrows() {
            let alg = ShuffleAlgebra::with_mutation(q.clone(), KernelMutation::FlipEdgeSign(e));
            let checks = check_matrix(&alg, 1).unwrap();
            assert!(checks.iter().any(|c| !c.holds), "mutation of {} went unnoticed", q.label(e));
        }
    }
}
