use std::collections::BTreeMap;

use proptest::prelude::*;
use quiver_core::{find_delta, q as rat, qi, DimVector, Quiver};
use series::{
    coha_character, elementary, hn_product, partitions, plethystic_exp, power_sum, semistable_character,
    slopes_in_window, symfunc_mul, GradedSeries, SlopeSet, SymFunc, TruncationWindow,
};

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn exp_is_multiplicative_on_coordinates() {
    let w = TruncationWindow::total(2, 6, 0);
    let z1 = GradedSeries::monomial(&w, DimVector(vec![1, 0]), 0, qi(1));
    let z2 = GradedSeries::monomial(&w, DimVector(vec![0, 1]), 0, qi(1));
    let lhs = plethystic_exp(&z1.add(&z2)).unwrap();
    let rhs = plethystic_exp(&z1).unwrap().mul(&plethystic_exp(&z2).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn simple_root_coefficient_is_one() {
    for q in [Quiver::kronecker(), Quiver::affine_a(2)] {
        let n = q.num_vertices();
        let ch = coha_character(&q, &TruncationWindow::total(n, 3, 3), 0).unwrap();
        for i in 0..n {
            assert_eq!(ch.coeff(&q.simple(i), 0), qi(1));
        }
        assert!(ch.is_nonneg_integral());
    }
}

#[test]
fn kronecker_delta_coefficients() {
    // weight δ: E_{α_1} ⊗ E_{α_0} products (one per t-split) plus h s^{-1} t^l and c t^l
    let q = Quiver::kronecker();
    let ch = coha_character(&q, &TruncationWindow::total(2, 2, 3), 0).unwrap();
    let delta = DimVector(vec![1, 1]);
    // q^0: x_0 x_1 and h: 2; q^-1: 2 (t-shifted products) + 1 (h t) + 1 (c t) = 4
    assert_eq!(ch.coeff(&delta, 0), qi(2));
    assert_eq!(ch.coeff(&delta, -1), qi(4));
}

#[test]
fn empty_slope_set_is_the_prefactor() {
    let q = Quiver::affine_a(2);
    let theta = find_delta(&q).unwrap().coweight_from_finite(&[qi(1), qi(2)]);
    let w = TruncationWindow::total(3, 3, 5);
    let p = semistable_character(&q, &theta, &SlopeSet::Values(Default::default()), &w, 2).unwrap();
    for k in 0..=5 {
        assert_eq!(p.coeff(&DimVector(vec![0, 0, 0]), -k), qi(binomial(k + 1, k)));
    }
    assert_eq!(p.len(), 6);
}

#[test]
fn all_slopes_recover_the_full_character() {
    let q = Quiver::kronecker();
    let theta = quiver_core::CoweightVector::from_ints(&[-1, 1]);
    let w = TruncationWindow::total(2, 4, 3);
    let all = semistable_character(&q, &theta, &SlopeSet::All, &w, 2).unwrap();
    assert_eq!(all, coha_character(&q, &w, 2).unwrap());
}

#[test]
fn hn_factorization() {
    let cases = [
        (Quiver::kronecker(), vec![qi(1)], 6),
        (Quiver::affine_a(2), vec![qi(1), qi(2)], 4),
    ];
    for (q, finite, total) in cases {
        let theta = find_delta(&q).unwrap().coweight_from_finite(&finite);
        let w = TruncationWindow::total(q.num_vertices(), total, 4);
        assert!(slopes_in_window(&theta, &w).len() > 3);
        for dim_a in [0, 2] {
            assert_eq!(hn_product(&q, &theta, &w, dim_a).unwrap(), coha_character(&q, &w, dim_a).unwrap());
        }
    }
}

fn series_from(w: &TruncationWindow, terms: &[(i64, i64, i64, i64)]) -> GradedSeries {
    let mut s = GradedSeries::zero(w);
    for &(a, b, k, c) in terms {
        if a + b > 0 {
            s.add_term(DimVector(vec![a, b]), -k, qi(c));
        }
    }
    s
}

proptest! {
    #[test]
    fn exp_sum_is_product(
        f in proptest::collection::vec((0i64..3, 0i64..3, 0i64..3, -3i64..4), 0..5),
        g in proptest::collection::vec((0i64..3, 0i64..3, 0i64..3, -3i64..4), 0..5),
    ) {
        let w = TruncationWindow::total(2, 4, 3);
        let (f, g) = (series_from(&w, &f), series_from(&w, &g));
        let lhs = plethystic_exp(&f.add(&g)).unwrap();
        let rhs = plethystic_exp(&f).unwrap().mul(&plethystic_exp(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

/// `m_λ` in `n` variables as an exponent map.
fn expand(lambda: &[u32], n: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    let mut v = lambda.to_vec();
    v.resize(n, 0);
    fn perms(v: &mut Vec<u32>, k: usize, out: &mut BTreeMap<Vec<u32>, i64>) {
        if k == v.len() {
            out.insert(v.clone(), 1);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            perms(v, k + 1, out);
            v.swap(k, i);
        }
    }
    perms(&mut v, 0, &mut out);
    out
}

fn poly_mul(a: &BTreeMap<Vec<u32>, i64>, b: &BTreeMap<Vec<u32>, i64>) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let e: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(e).or_insert(0) += c * d;
        }
    }
    out
}

#[test]
fn structure_constants_match_brute_force() {
    let small: Vec<Vec<u32>> = (0..=3).flat_map(partitions).collect();
    for l in &small {
        for m in &small {
            let n = l.len() + m.len();
            if n == 0 {
                continue;
            }
            let brute = poly_mul(&expand(l, n), &expand(m, n));
            let prod = symfunc_mul(&SymFunc::monomial(l.clone()), &SymFunc::monomial(m.clone()));
            let total: u32 = l.iter().sum::<u32>() + m.iter().sum::<u32>();
            for nu in partitions(total) {
                let mut key = nu.clone();
                key.resize(n, 0);
                let expect = brute.get(&key).copied().unwrap_or(0);
                assert_eq!(prod.coeff(&nu), qi(expect), "{l:?} {m:?} {nu:?}");
            }
        }
    }
    let m1 = SymFunc::monomial(vec![1]);
    let sq = symfunc_mul(&m1, &m1);
    assert_eq!(sq, SymFunc::monomial(vec![1, 1]).scale(&qi(2)).add(&SymFunc::monomial(vec![2])));
}

#[test]
fn elementary_generating_function() {
    // exp(Σ (−1)^{k−1} p_k u^k / k) up to u^5, with SymFunc coefficients indexed by the u-degree
    const N: usize = 5;
    let mut g: Vec<SymFunc> = vec![SymFunc::zero(); N + 1];
    for k in 1..=N {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        g[k] = power_sum(k as u32).scale(&rat(sign, k as i64));
    }
    let mul = |a: &Vec<SymFunc>, b: &Vec<SymFunc>| {
        let mut out = vec![SymFunc::zero(); N + 1];
        for i in 0..=N {
            for j in 0..=N - i {
                out[i + j] = out[i + j].add(&symfunc_mul(&a[i], &b[j]));
            }
        }
        out
    };
    let mut total = vec![SymFunc::zero(); N + 1];
    total[0] = SymFunc::one();
    let mut term = total.clone();
    for m in 1..=N {
        term = mul(&term, &g).into_iter().map(|x| x.scale(&rat(1, m as i64))).collect();
        for i in 0..=N {
            total[i] = total[i].add(&term[i]);
        }
    }
    for (l, t) in total.iter().enumerate() {
        assert_eq!(*t, elementary(l as u32), "degree {l}");
    }
}

fn arb_partition() -> impl Strategy<Value = Vec<u32>> {
    (0u32..=5).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn symfunc_commutative_associative(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
        let (a, b, c) = (SymFunc::monomial(a), SymFunc::monomial(b), SymFunc::monomial(c));
        prop_assert_eq!(symfunc_mul(&a, &b), symfunc_mul(&b, &a));
        prop_assert_eq!(symfunc_mul(&symfunc_mul(&a, &b), &c), symfunc_mul(&a, &symfunc_mul(&b, &c)));
    }
}

