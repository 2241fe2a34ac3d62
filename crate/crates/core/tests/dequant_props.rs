use std::f64::consts::LN_2;

use proptest::prelude::*;
use tropos::dequant::{add_h, deformation_residual, phi_h, DeformationParam};
use tropos::semiring::ExtReal;

fn p(h: f64) -> DeformationParam {
    DeformationParam::new(h).unwrap()
}

fn hs() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), Just(0.1), Just(0.01), Just(1e-4), 1e-4..2.0f64]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn deformed_sum_is_squeezed_onto_max(u in -1e6..1e6f64, d in -1e6..1e6f64, h in hs()) {
        let v = u + d;
        let s = add_h(ExtReal::new(u), ExtReal::new(v), p(h)).to_f64();
        prop_assert!(s.is_finite());
        prop_assert!(u.max(v) <= s);
        prop_assert!(s <= u.max(v) + h * LN_2 + 1e-12 * u.abs().max(v.abs()));
        let r = deformation_residual(u, v, p(h)).unwrap();
        prop_assert!((0.0..=h * LN_2).contains(&r));
    }

    #[test]
    fn negative_h_squeezes_onto_min(u in -1e3..1e3f64, v in -1e3..1e3f64, h in hs()) {
        let s = add_h(ExtReal::new(u), ExtReal::new(v), p(-h)).to_f64();
        prop_assert!(u.min(v) - h * LN_2 - 1e-12 <= s && s <= u.min(v));
        prop_assert_eq!(add_h(ExtReal::PosInf, ExtReal::new(u), p(-h)), ExtReal::new(u));
    }

    #[test]
    fn phi_is_a_homomorphism(x in 1e-3..1e3f64, y in 1e-3..1e3f64, h in hs()) {
        let ph = |t| phi_h(t, p(h)).unwrap();
        prop_assert!((ph(x * y).to_f64() - (ph(x).to_f64() + ph(y).to_f64())).abs() < 1e-10);
        let deformed = add_h(ph(x), ph(y), p(h));
        prop_assert!((ph(x + y).to_f64() - deformed.to_f64()).abs() < 1e-10);
    }

    #[test]
    fn deformed_sum_is_commutative_and_associative(u in -50.0..50.0f64, v in -50.0..50.0f64, w in -50.0..50.0f64,
                                                    h in prop_oneof![Just(1.0), Just(0.1), Just(0.01)]) {
        let (a, b, c) = (ExtReal::new(u), ExtReal::new(v), ExtReal::new(w));
        let add = |x, y| add_h(x, y, p(h));
        prop_assert_eq!(add(a, b), add(b, a));
        prop_assert!(add(add(a, b), c).approx_eq(add(a, add(b, c)), 1e-10));
        prop_assert_eq!(add(ExtReal::NegInf, a), a);
    }

    #[test]
    fn residual_is_monotone_in_h(u in -10.0..10.0f64, v in -10.0..10.0f64, h in 1e-3..1.0f64, k in 1.0..4.0f64) {
        let small = deformation_residual(u, v, p(h)).unwrap();
        let large = deformation_residual(u, v, p(h * k)).unwrap();
        prop_assert!(small <= large);
    }

    #[test]
    fn halving_h_halves_the_worst_case(u in -1e3..1e3f64, h in 1e-3..10.0f64) {
        let full = deformation_residual(u, u, p(h)).unwrap();
        let half = deformation_residual(u, u, p(h / 2.0)).unwrap();
        prop_assert_eq!(half, full / 2.0);
    }
}

#[test]
fn no_overflow_at_extreme_gaps() {
    for h in [1.0, 0.1, 0.01, 1e-4] {
        let s = add_h(ExtReal::new(1e6), ExtReal::new(-1e6), p(h));
        assert_eq!(s, ExtReal::new(1e6));
        let s = add_h(ExtReal::new(1e6), ExtReal::new(1e6), p(h)).to_f64();
        assert!((s - 1e6 - h * LN_2).abs() < 1e-9);
    }
}

#[test]
fn small_h_recovers_max_and_min() {
    let (a, b) = (ExtReal::new(3.0), ExtReal::new(5.0));
    assert!((add_h(a, b, p(1e-3)).to_f64() - 5.0).abs() < 1e-3);
    assert!((add_h(a, b, p(-0.01)).to_f64() - 3.0).abs() <= 0.01 * LN_2);
}
