use proptest::prelude::*;
use specfun_core::means::{
    agm, agm_value, arithmetic_mean, geometric_mean, log_mean, power_mean, MeanPair,
};

proptest! {
    #[test]
    fn homogeneous_and_symmetric(a in 1e-3f64..1e3, b in 1e-3f64..1e3, lambda in 1e-3f64..1e3) {
        let p = MeanPair::new(a, b).unwrap();
        let q = p.scaled(lambda).unwrap();
        let means: [fn(MeanPair) -> f64; 3] = [agm_value, log_mean, |p| power_mean(1.5, p).unwrap()];
        for m in means {
            let base = m(p);
            prop_assert!((m(q) - lambda * base).abs() <= 1e-13 * lambda * base);
            prop_assert!((m(p.swapped()) - base).abs() <= 1e-14 * base);
        }
    }

    #[test]
    fn agm_sandwich(a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
        let p = MeanPair::new(a, b).unwrap();
        let (v, trace) = agm(p);
        prop_assert!(geometric_mean(p) <= v * (1.0 + 1e-15));
        prop_assert!(v <= arithmetic_mean(p) * (1.0 + 1e-15));
        let last = trace.iterations;
        prop_assert!(trace.a[last] - trace.b[last] <= 4.0 * f64::EPSILON * trace.a[last]);
    }

    #[test]
    fn power_means_ordered(a in 1e-3f64..1e3, b in 1e-3f64..1e3, s in -5.0f64..5.0, d in 0.0f64..5.0) {
        let p = MeanPair::new(a, b).unwrap();
        let lo = power_mean(s, p).unwrap();
        let hi = power_mean(s + d, p).unwrap();
        prop_assert!(lo <= hi * (1.0 + 1e-14));
    }
}
