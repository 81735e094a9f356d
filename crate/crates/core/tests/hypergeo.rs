use proptest::prelude::*;
use specfun_core::hypergeo::{gauss_2f1, gauss_2f1_series, gauss_value_at_1, HypTriple};
use specfun_core::SeriesConfig;

fn f(a: f64, b: f64, c: f64, z: f64) -> f64 {
    gauss_2f1(&HypTriple::new(a, b, c).unwrap(), z).unwrap().value
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn reference_values() {
    // mpmath hyp2f1
    assert!(rel(f(0.3, 1.7, 2.5, 0.8), 1.313_590_102_837_357_5) < 1e-14);
    assert!(rel(f(1.5, 2.0, 1.2, -0.75), 0.235_518_030_657_507_98) < 1e-14);
    assert!(rel(f(0.5, 0.5, 1.0, 0.999), 3.081_960_708_698_816) < 1e-14);
}

#[test]
fn elementary_closed_forms() {
    for z in [-0.9, -0.3, 0.2, 0.7, 0.97] {
        // F(1,1;2;z) = −ln(1−z)/z
        assert!(rel(f(1.0, 1.0, 2.0, z), -(1.0f64 - z).ln() / z) < 1e-14);
        // F(a,b;b;z) = (1−z)^{−a}
        assert!(rel(f(0.7, 2.3, 2.3, z), (1.0f64 - z).powf(-0.7)) < 1e-13);
    }
}

#[test]
fn gauss_sum() {
    let t = HypTriple::new(0.25, 0.5, 2.0).unwrap();
    let at_one = gauss_value_at_1(&t).unwrap();
    let near = gauss_2f1(&t, 1.0 - 1e-12).unwrap().value;
    assert!(rel(near, at_one) < 1e-9);
}

proptest! {
    #[test]
    fn symmetric_in_a_b(a in -3.0f64..3.0, b in -3.0f64..3.0, c in 0.1f64..4.0, z in -0.95f64..0.95) {
        let x = f(a, b, c, z);
        let y = f(b, a, c, z);
        prop_assert!((x - y).abs() <= 1e-14 * x.abs());
    }

    /// The router's choice of transformation must agree with the plain series
    /// wherever the latter converges comfortably.
    #[test]
    fn regimes_agree_with_series(a in 0.1f64..2.0, b in 0.1f64..2.0, c in 0.5f64..4.0, z in -0.6f64..0.85) {
        let t = HypTriple::new(a, b, c).unwrap();
        let routed = gauss_2f1(&t, z).unwrap().value;
        let plain = gauss_2f1_series(&t, z, &SeriesConfig::default()).unwrap().value;
        prop_assert!((routed - plain).abs() <= 1e-12 * plain.abs().max(1.0));
    }

    /// Euler: F(a,b;c;z) = (1−z)^{c−a−b} F(c−a,c−b;c;z).
    #[test]
    fn euler_transformation(a in 0.1f64..2.0, b in 0.1f64..2.0, c in 0.5f64..4.0, z in 0.0f64..0.99) {
        let lhs = f(a, b, c, z);
        let rhs = (1.0 - z).powf(c - a - b) * f(c - a, c - b, c, z);
        prop_assert!(rel(lhs, rhs) < 1e-11, "lhs {lhs} rhs {rhs}");
    }
}
