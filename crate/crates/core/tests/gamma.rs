use proptest::prelude::*;
use specfun_core::special::{
    beta, digamma, gamma, gamma_ratio, ln_abs_gamma, ln_gamma, pochhammer, trigamma,
};
use specfun_core::SpecFunError;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn reference_values() {
    // mpmath, 30 digits
    assert!(rel(gamma(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6) < 1e-15);
    assert!(rel(gamma(-2.5).unwrap(), -0.945_308_720_482_941_9) < 1e-14);
    assert!(rel(ln_gamma(100.0).unwrap(), 359.134_205_369_575_4) < 1e-15);
    assert!(rel(ln_gamma(1e-8).unwrap(), 18.420_680_738_180_21) < 1e-15);
    assert!(rel(digamma(0.25).unwrap(), -4.227_453_533_376_265) < 1e-15);
    assert!(rel(gamma(0.5).unwrap(), std::f64::consts::PI.sqrt()) < 1e-15);
    assert_eq!(gamma(10.0).unwrap(), 362_880.0);
}

#[test]
fn poles_and_overflow() {
    assert!(matches!(gamma(0.0), Err(SpecFunError::Pole { .. })));
    assert!(matches!(gamma(-3.0), Err(SpecFunError::Pole { .. })));
    assert!(gamma(180.0).is_err());
    assert!(ln_gamma(-1.0).is_err());
    assert_eq!(gamma_ratio(&[2.0], &[-1.0]).unwrap(), 0.0);
}

#[test]
fn trigamma_at_one() {
    let want = std::f64::consts::PI.powi(2) / 6.0;
    assert!(rel(trigamma(1.0).unwrap(), want) < 1e-14);
}

proptest! {
    #[test]
    fn recurrence(x in 0.01f64..150.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-13, "x = {x}");
    }

    #[test]
    fn log_recurrence(x in 0.01f64..1e6) {
        let d = ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap();
        prop_assert!((d - x.ln()).abs() < 1e-12 * (1.0 + ln_gamma(x).unwrap().abs()));
    }

    #[test]
    fn reflection(x in 0.01f64..0.99) {
        let p = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let want = std::f64::consts::PI / (std::f64::consts::PI * x).sin();
        prop_assert!(rel(p, want) < 1e-13);
    }

    #[test]
    fn digamma_recurrence(x in 0.05f64..100.0) {
        let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((d - 1.0 / x).abs() < 1e-12 * (1.0 + 1.0 / x));
    }

    #[test]
    fn beta_symmetry_and_gamma_form(a in 0.1f64..20.0, b in 0.1f64..20.0) {
        let direct = beta(a, b).unwrap();
        prop_assert!(rel(direct, beta(b, a).unwrap()) < 1e-14);
        let via = (ln_gamma(a).unwrap() + ln_gamma(b).unwrap() - ln_gamma(a + b).unwrap()).exp();
        prop_assert!(rel(direct, via) < 1e-12);
    }

    #[test]
    fn pochhammer_matches_ratio(a in 0.1f64..10.0, n in 0u32..20) {
        let want = gamma_ratio(&[a + n as f64], &[a]).unwrap();
        prop_assert!(rel(pochhammer(a, n), want) < 1e-12);
    }

    #[test]
    fn abs_gamma_negative(x in -20.0f64..-0.01) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let g = gamma(x).unwrap();
        prop_assert!((g.abs().ln() - ln_abs_gamma(x).unwrap()).abs() < 1e-11 * (1.0 + g.abs().ln().abs()));
    }
}
