use proptest::prelude::*;
use ulrich_core::arith::{binom_int, binom_poly};
use ulrich_core::ci::{self, CIConfig};
use ulrich_core::symfunc::{expand_direct, expand_via_restriction, reconstruct, sample_symmetric};
use ulrich_core::{MultiPoly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(a, b)| Rational::frac(a, b))
}

fn poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, nvars), rational()), 0..6)
        .prop_map(move |terms| MultiPoly::from_terms(nvars, terms).unwrap())
}

fn triple(nvars: usize) -> impl Strategy<Value = (MultiPoly, MultiPoly, MultiPoly)> {
    (poly(nvars), poly(nvars), poly(nvars))
}

fn point(nvars: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), nvars)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(3), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map((a, b, _) in triple(3), x in point(3)) {
        let ea = a.eval(&x).unwrap();
        let eb = b.eval(&x).unwrap();
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
    }

    #[test]
    fn dividing_out_the_variable_product(a in poly(4)) {
        let m = MultiPoly::product_of_vars(4);
        prop_assert_eq!((&a * &m).divide_all_vars().unwrap(), a);
    }

    #[test]
    fn text_and_serde_round_trip(a in poly(4)) {
        prop_assert_eq!(MultiPoly::parse(&a.to_string(), 4).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiPoly>(&json).unwrap(), a);
    }

    #[test]
    fn rational_serde_round_trip(x in rational()) {
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn composition_commutes_with_evaluation(a in poly(2), subs in (poly(3), poly(3)), x in point(3)) {
        let subs = [subs.0, subs.1];
        let inner: Vec<Rational> = subs.iter().map(|p| p.eval(&x).unwrap()).collect();
        prop_assert_eq!(a.compose(&subs).unwrap().eval(&x).unwrap(), a.eval(&inner).unwrap());
    }

    #[test]
    fn orbit_sum_of_block_invariant_is_symmetric(a in poly(2), k in 0usize..=4) {
        let n = 4;
        let block = |range: std::ops::Range<usize>| {
            range.fold(MultiPoly::zero(n), |acc, i| &acc + &MultiPoly::var(n, i))
        };
        let g = a.compose(&[block(0..k), block(k..n)]).unwrap();
        prop_assert!(g.orbit_sum(k).unwrap().is_symmetric());
    }

    #[test]
    fn pascal_rule(ell in -40i64..40, m in 1i64..12) {
        prop_assert_eq!(
            binom_int(ell + 1, m).unwrap(),
            binom_int(ell, m).unwrap() + binom_int(ell, m - 1).unwrap()
        );
    }

    #[test]
    fn binomial_of_a_polynomial_evaluates_pointwise(a in poly(2), m in 0i64..5, x in (-6i64..6, -6i64..6)) {
        let v = a.eval_int(&[x.0, x.1]).unwrap();
        let lhs = binom_poly(&a, m).unwrap().eval_int(&[x.0, x.1]).unwrap();
        let mut rhs = Rational::one();
        for j in 0..m {
            rhs = &rhs * &(&v - &Rational::from(j));
        }
        for j in 1..=m {
            rhs = &rhs * &Rational::frac(1, j);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_methods_agree(coeffs in prop::array::uniform12(rational()), s in 5usize..=7) {
        let g = reconstruct(&coeffs, s);
        let direct = expand_direct(&g).unwrap();
        prop_assert_eq!(&direct.coeffs, &coeffs);
        prop_assert_eq!(expand_via_restriction(&g).unwrap(), direct);
    }

    #[test]
    fn degree_routes_agree(degrees in prop::collection::vec(1i64..=6, 1..=5), n in 3i64..=8, r in 1i64..=5) {
        prop_assume!(degrees.iter().product::<i64>() >= 2);
        let cfg = CIConfig::new(n, degrees, r).unwrap();
        prop_assert_eq!(ci::deg_z(&cfg), ci::deg_z_general(&cfg));
    }

    #[test]
    fn euler_characteristic_routes_agree(
        degrees in prop::collection::vec(1i64..=5, 1..=4),
        n in 2i64..=6,
        r in 2i64..=4,
        m in -6i64..=6,
    ) {
        prop_assume!(degrees.iter().product::<i64>() >= 2);
        let cfg = CIConfig::new(n, degrees, r).unwrap();
        prop_assume!(!ci::parity_obstruction(&cfg));
        prop_assert_eq!(ci::chi_oz(&cfg, m).unwrap(), ci::chi_oz_general(&cfg, m).unwrap());
        prop_assert!(ci::ideal_sheaf_checks(&cfg).unwrap().iter().all(ci::IdealCheck::holds));
    }

    #[test]
    fn padding_preserves_invariants(degrees in prop::collection::vec(2i64..=5, 1..=3), n in 4i64..=6, r in 2i64..=3, m in -3i64..=3) {
        let cfg = CIConfig::new(n, degrees, r).unwrap();
        let wide = cfg.padded(cfg.degrees.len() + 2);
        prop_assert_eq!(ci::canonical_coeff(&cfg), ci::canonical_coeff(&wide));
        prop_assert_eq!(ci::c2x_coeff(&cfg), ci::c2x_coeff(&wide));
        prop_assert_eq!(ci::det_twist(&cfg), ci::det_twist(&wide));
        prop_assert_eq!(ci::deg_z(&cfg), ci::deg_z(&wide));
        prop_assert_eq!(ci::chi_ox(&cfg, m), ci::chi_ox(&wide, m));
    }

    #[test]
    fn ulrich_vanishing(degrees in prop::collection::vec(1i64..=5, 1..=4), n in 2i64..=8, r in 1i64..=4) {
        prop_assume!(degrees.iter().product::<i64>() >= 2);
        let cfg = CIConfig::new(n, degrees, r).unwrap();
        for p in 1..=n {
            prop_assert!(ci::chi_e(&cfg, -p).is_zero());
        }
    }

    #[test]
    fn certify_is_deterministic(degrees in prop::collection::vec(2i64..=5, 1..=3), n in 4i64..=8, r in 1i64..=4) {
        let cfg = CIConfig::new(n, degrees, r).unwrap();
        let a = ci::certify(&cfg).unwrap();
        prop_assert_eq!(&a, &ci::certify(&cfg).unwrap());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ci::Certificate>(&json).unwrap(), a);
    }
}

#[test]
fn samples_are_reproducible_and_symmetric() {
    let a = sample_symmetric(5, 10, 7);
    assert_eq!(a, sample_symmetric(5, 10, 7));
    assert_ne!(a, sample_symmetric(5, 10, 8));
    assert!(a.iter().all(MultiPoly::is_symmetric));
}
