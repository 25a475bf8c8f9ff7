use omega_core::catalog::{
    hyper_coanalytic_unchecked, hyper_condition, make_example, poly_condition, CatalogParams, ExampleName,
    HyperCondition, PolyCondition,
};
use omega_core::membership::{coefficient_sufficient, harmonic_membership, SumOutcome};
use omega_core::specfun::HypergeomParams;
use omega_core::{ClassParams, Complex64, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn polynomials_are_the_terminating_hypergeometric_maps() {
    let eta = Complex64::from_polar(0.7, 0.4);
    for (poly, hyper) in [
        (ExampleName::P1, ExampleName::F4),
        (ExampleName::P2, ExampleName::F5),
        (ExampleName::P3, ExampleName::F6),
    ] {
        for s in 0..=10u64 {
            for c in [0.5, 1.0, 2.5, 7.0] {
                let sf = s as f64;
                let p = HypergeomParams::new(-sf, -sf, c).unwrap();
                let g = hyper_coanalytic_unchecked(hyper, &p, eta, s as usize + 3).unwrap();
                let f = make_example(&CatalogParams::new(poly, 1.0).eta(eta).poly(s, c)).unwrap();
                let degree = g.degree().max(f.g().degree());
                for n in 0..=degree {
                    assert_eq!(f.g().coeff(n), g.coeff(n), "{poly:?} s = {s} c = {c} n = {n}");
                }
            }
        }
    }
}

#[test]
fn truncation_barely_moves_fast_decaying_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let a = rng.gen_range(0.05..1.0);
        let b = rng.gen_range(0.05..1.0);
        let c = a + b + rng.gen_range(15.0..25.0);
        let p = HypergeomParams::new(a, b, c).unwrap();
        for name in [ExampleName::F4, ExampleName::F5, ExampleName::F6] {
            let at = |n| {
                make_example(&CatalogParams::new(name, 1.0).hyper(p).truncation(n))
                    .unwrap()
                    .coefficient_sum()
            };
            let (short, long) = (at(64), at(128));
            assert!((short - long).abs() < 1e-12, "{name:?} ({a}, {b}, {c}): {short} vs {long}");
        }
    }
}

#[test]
fn slow_decay_needs_longer_truncations() {
    // terms decay like n^(a + b - c - 1): at excess 1.5 the tail past z^64 is visible
    let p = HypergeomParams::new(1.0, 1.0, 3.5).unwrap();
    let at = |n| {
        make_example(&CatalogParams::new(ExampleName::F4, 1.0).hyper(p).truncation(n))
            .unwrap()
            .coefficient_sum()
    };
    assert!((at(64) - at(128)).abs() > 1e-6);
}

#[test]
fn holding_thresholds_give_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for which in [HyperCondition::Gauss, HyperCondition::Shifted, HyperCondition::Weighted] {
        let mut held = 0;
        for _ in 0..50 {
            let a = rng.gen_range(0.1..2.0);
            let b = rng.gen_range(0.1..2.0);
            let c = a + b + rng.gen_range(1.2..6.0);
            let eta = Complex64::from_polar(rng.gen_range(0.05..1.0), rng.gen_range(0.0..6.28));
            let lambda = rng.gen_range(0.2..3.0);
            let p = HypergeomParams::new(a, b, c).unwrap();
            let r = hyper_condition(which, &p, eta, lambda).unwrap();
            if !r.holds {
                continue;
            }
            held += 1;
            let f = make_example(&CatalogParams::new(which.example(), lambda).eta(eta).hyper(p)).unwrap();
            let cp = ClassParams::new(lambda).unwrap();
            assert_eq!(coefficient_sufficient(&f, &cp).outcome, SumOutcome::Sufficient);
            assert_ne!(harmonic_membership(&f, &cp).unwrap().verdict, Verdict::NonMember);
        }
        assert!(held > 5, "{which:?} held only {held} times");
    }
    for which in [PolyCondition::Gauss, PolyCondition::Shifted, PolyCondition::Weighted] {
        let mut held = 0;
        for _ in 0..50 {
            let s = rng.gen_range(0..6u64);
            let c = rng.gen_range(0.5..12.0);
            let eta = Complex64::from_polar(rng.gen_range(0.05..1.0), rng.gen_range(0.0..6.28));
            let lambda = rng.gen_range(0.2..4.0);
            let r = poly_condition(which, s, c, eta, lambda).unwrap();
            if !r.holds {
                continue;
            }
            held += 1;
            let f = make_example(&CatalogParams::new(which.example(), lambda).eta(eta).poly(s, c)).unwrap();
            let cp = ClassParams::new(lambda).unwrap();
            assert_eq!(coefficient_sufficient(&f, &cp).outcome, SumOutcome::Sufficient);
            assert_ne!(harmonic_membership(&f, &cp).unwrap().verdict, Verdict::NonMember);
        }
        assert!(held > 5, "{which:?} held only {held} times");
    }
}
