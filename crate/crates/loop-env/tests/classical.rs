mod common;

use loop_env::*;
use quiver_core::{q, qi, CoweightVector, Quiver};

fn kronecker() -> LoopAlgebra {
    LoopAlgebra::new(&Quiver::kronecker()).unwrap()
}

fn slope_pbw(alg: &LoopAlgebra) -> Pbw<'_> {
    Pbw::new(alg, PbwOrder::slope(alg, CoweightVector::from_ints(&[-1, 1])).unwrap())
}

#[test]
fn slope_projection() {
    let alg = kronecker();
    let pbw = slope_pbw(&alg);
    let spec = SlopeIdealSpec::nonpositive(CoweightVector::from_ints(&[-1, 1]));
    let es = LieEltLoop::basis(alg.root(&[1], -1, 0));
    let es2 = LieEltLoop::basis(alg.root(&[1], -2, 0));
    let f = LieEltLoop::basis(alg.root(&[-1], 0, 0));
    let hs = LieEltLoop::basis(alg.cartan(1, -1, 0));
    // e s⁻¹ has slope −1, f has slope 1, h s⁻¹ has slope 0
    let kept = pbw.product(&[es.clone(), es2.clone(), hs.clone()]).unwrap();
    assert_eq!(slope_project(&pbw, &spec, &kept).unwrap(), kept);
    let killed = pbw.product(&[es.clone(), f.clone()]).unwrap();
    assert_eq!(killed.len(), 1);
    assert!(slope_project(&pbw, &spec, &killed).unwrap().is_zero());
    // f·(e s⁻¹) = (e s⁻¹)·f − h s⁻¹
    let mixed = pbw.product(&[f, es]).unwrap();
    let once = slope_project(&pbw, &spec, &mixed).unwrap();
    assert_eq!(once, EnvElt::from_lie(&hs).scale(&qi(-1)));
    assert_eq!(slope_project(&pbw, &spec, &once).unwrap(), once);
}

#[test]
fn slope_projection_rejects_other_orders() {
    let alg = kronecker();
    let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, CoweightVector::from_ints(&[1, -1])).unwrap());
    let spec = SlopeIdealSpec::nonpositive(CoweightVector::from_ints(&[-1, 1]));
    assert!(matches!(slope_project(&pbw, &spec, &EnvElt::one()), Err(LoopError::Configuration(_))));
    assert!(SlopeIdealSpec::new(CoweightVector::from_ints(&[-1, 1]), Some(qi(1)), Some(qi(0))).is_err());
}

#[test]
fn theta_images() {
    let alg = kronecker();
    let theta = PbwOrder::standard_theta(&alg);
    let pbw = Pbw::new(&alg, PbwOrder::completion(&alg, theta).unwrap());
    let y = theta_image(&pbw, ThetaClass::Y { i: 1, n: 2 }, 0).unwrap();
    assert_eq!(y, EnvElt::monomial(vec![alg.cartan(1, -2, 0)]).scale(&qi(-1)));
    // Z(1,0) = e + e s·h s⁻¹ + …
    let z = theta_image(&pbw, ThetaClass::Z { i: 1, n: 0 }, 1).unwrap();
    let e0 = LieEltLoop::basis(alg.root(&[1], 0, 0));
    let e1 = LieEltLoop::basis(alg.root(&[1], 1, 0));
    let h = LieEltLoop::basis(alg.cartan(1, -1, 0));
    assert_eq!(z, EnvElt::from_lie(&e0).add(&pbw.product(&[e1, h]).unwrap()));
    assert!(matches!(theta_image(&pbw, ThetaClass::Y { i: 0, n: 1 }, 0), Err(LoopError::Domain(_))));
}

#[test]
fn theta_commutators_a2_affine() {
    let alg = LoopAlgebra::new(&Quiver::affine_a(2)).unwrap();
    let pbw = Pbw::new(&alg, PbwOrder::completion(&alg, PbwOrder::standard_theta(&alg)).unwrap());
    let window = 3;
    for i in 1..3 {
        for j in 1..3 {
            for d in 1..=3u32 {
                for n in -3..=3 {
                    let y = theta_image(&pbw, ThetaClass::Y { i: j, n: d }, 0).unwrap();
                    let z = theta_image(&pbw, ThetaClass::Z { i, n }, window).unwrap();
                    let lhs = pbw.mul(&y, &z).unwrap().sub(&pbw.mul(&z, &y).unwrap());
                    let rhs = predicted_commutator(&pbw, j, d, i, n, window).unwrap();
                    assert_eq!(lhs, rhs, "Y({j},{d}), Z({i},{n})");
                }
            }
        }
    }
}

#[test]
fn limit_products() {
    let alg = kronecker();
    let pbw = Pbw::new(&alg, PbwOrder::completion(&alg, PbwOrder::standard_theta(&alg)).unwrap());
    let y1 = Family::theta(&pbw, ThetaClass::Y { i: 1, n: 1 }, 16);
    let y2 = Family::theta(&pbw, ThetaClass::Y { i: 1, n: 2 }, 16);
    let p = limit_multiply(&pbw, &y1, &y2, -2, 6).unwrap();
    let r = limit_multiply(&pbw, &y2, &y1, -2, 6).unwrap();
    assert_eq!(p.value, r.value);
    let h1 = LieEltLoop::basis(alg.cartan(1, -1, 0));
    let h2 = LieEltLoop::basis(alg.cartan(1, -2, 0));
    assert_eq!(p.value, pbw.product(&[h1, h2]).unwrap().scale(&qi(-1)));

    let z = Family::theta(&pbw, ThetaClass::Z { i: 1, n: 0 }, 16);
    let unit = Family::unit();
    let zu = limit_multiply(&pbw, &z, &unit, -1, 6).unwrap();
    assert_eq!(zu.value, theta_component(&pbw, ThetaClass::Z { i: 1, n: 0 }, -1, 16).unwrap());

    // [Θ(Y(1,1)), Θ(Z(1,0))] = −2·Θ(Z(1,1)) on the level −1 component
    let yz = limit_multiply(&pbw, &y1, &z, -1, 6).unwrap().value;
    let zy = limit_multiply(&pbw, &z, &y1, -1, 6).unwrap().value;
    let target = theta_component(&pbw, ThetaClass::Z { i: 1, n: 1 }, -1, 16).unwrap().scale(&qi(-2));
    let got = component(&pbw, &yz.sub(&zy), -1).unwrap();
    assert_eq!(got, target, "{} vs {}", got.display(&alg), target.display(&alg));
}

#[test]
fn limit_precision_error() {
    let alg = kronecker();
    let pbw = Pbw::new(&alg, PbwOrder::completion(&alg, PbwOrder::standard_theta(&alg)).unwrap());
    let drifting = Family::new(|l| Ok(EnvElt::one().scale(&q(l, 1))));
    assert!(matches!(limit_multiply(&pbw, &drifting, &Family::unit(), 0, 3), Err(LoopError::Precision { depth: 3 })));
}

#[test]
fn identities_orders_one_to_five() {
    for series in [IdentitySeries::H, IdentitySeries::E] {
        let report = verify_identity_a1(&Quiver::kronecker(), series, 5).unwrap();
        assert_eq!(report.coefficients.len(), 5);
        assert!(report.holds(), "{series}: {:?}", report.witness().map(|c| c.order));
        assert!(report.coefficients.iter().all(|c| !c.lhs.is_zero()));
    }
    assert!(verify_identity_a1(&Quiver::affine_a(2), IdentitySeries::H, 2).is_err());
    assert!(verify_identity_a1(&Quiver::kronecker(), IdentitySeries::H, MAX_IDENTITY_ORDER + 1).is_err());
}
