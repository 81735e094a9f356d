use specfun_core::hypergeo::theorem31_k;
use specfun_core::special::{anderson_f, ln_gamma};
use specfun_core::SpecFunError;
use specfun_verify::{
    bk_ratio_probe, convex_check, derivative_sign_check, lhopital_rule_probe, monotone_check, Anchor,
    Curvature, Direction, GridSpec, Sign, SuiteReport,
};

type Eval = Result<f64, SpecFunError>;

fn assert_clean(r: &SuiteReport) {
    assert!(r.clean(), "{}: {:?} {:?}", r.suite, r.violations, r.failures);
    assert!(r.points > 0, "{} evaluated nothing: {:?}", r.suite, r.note);
}

#[test]
fn anderson_f_increasing_and_concave() {
    let grid = GridSpec::log(1.0, 50.0, 200);
    assert_clean(&monotone_check(anderson_f, &grid, Direction::Increasing).unwrap());
    assert_clean(&convex_check(anderson_f, &grid, Curvature::Concave).unwrap());
    // the same function is not decreasing
    assert!(!monotone_check(anderson_f, &grid, Direction::Decreasing).unwrap().passed());
}

#[test]
fn theorem31_k_increasing_and_convex() {
    let k = |x: f64| theorem31_k(0.5, 0.5, x);
    let grid = GridSpec::log(1e-3, 20.0, 100);
    assert_clean(&monotone_check(k, &grid, Direction::Increasing).unwrap());
    assert_clean(&convex_check(k, &grid, Curvature::Convex).unwrap());
}

#[test]
fn constant_is_monotone_with_zero_margins() {
    let grid = GridSpec::linear(0.0, 1.0, 11);
    let c = |_: f64| -> Eval { Ok(2.5) };
    for dir in [Direction::Increasing, Direction::Decreasing] {
        let r = monotone_check(c, &grid, dir).unwrap();
        assert_clean(&r);
        assert_eq!(r.min_margin, 0.0);
    }
}

#[test]
fn monotone_check_reports_decrease() {
    let grid = GridSpec::linear(0.0, 3.0, 31);
    let bump = |x: f64| -> Eval { Ok(-(x - 1.5) * (x - 1.5)) };
    let r = monotone_check(bump, &grid, Direction::Increasing).unwrap();
    assert!(!r.passed());
    assert!(r.violations.iter().all(|v| v.point > 1.5));
}

#[test]
fn evaluation_failures_are_recorded_not_fatal() {
    let grid = GridSpec::linear(-1.0, 1.0, 21);
    let r = monotone_check(ln_gamma, &grid, Direction::Decreasing).unwrap();
    assert!(!r.failures.is_empty());
    assert!(r.failures.iter().all(|f| f.point <= 0.0));
}

#[test]
fn lhopital_gamma_over_x_log_x() {
    let g = |x: f64| ln_gamma(x + 1.0);
    let h = |x: f64| -> Eval { Ok(x * x.ln()) };
    let r = lhopital_rule_probe(g, h, Anchor::Left(1.0), &GridSpec::linear(1.0, 20.0, 100)).unwrap();
    assert_clean(&r);
}

#[test]
fn lhopital_identical_functions() {
    let f = |x: f64| -> Eval { Ok(x.exp()) };
    let r = lhopital_rule_probe(f, f, Anchor::Right(2.0), &GridSpec::linear(0.5, 2.0, 40)).unwrap();
    assert_clean(&r);
}

#[test]
fn lhopital_square_over_identity() {
    let g = |x: f64| -> Eval { Ok(x * x) };
    let h = |x: f64| -> Eval { Ok(x) };
    let r = lhopital_rule_probe(g, h, Anchor::Left(0.0), &GridSpec::linear(0.0, 1.0, 50)).unwrap();
    assert_clean(&r);
}

#[test]
fn lhopital_premise_failure_is_a_note() {
    // g′/h′ = cos x changes monotonicity on (0, 2π)
    let g = |x: f64| -> Eval { Ok(x.sin()) };
    let h = |x: f64| -> Eval { Ok(x) };
    let r = lhopital_rule_probe(g, h, Anchor::Left(0.0), &GridSpec::linear(0.0, 6.0, 60)).unwrap();
    assert_eq!(r.points, 0);
    assert!(r.note.as_deref().unwrap().contains("premise"));
}

fn factorial_reciprocals(n: usize) -> Vec<f64> {
    let mut s = vec![1.0];
    for k in 1..n {
        let prev = s[k - 1];
        s.push(prev / k as f64);
    }
    s
}

#[test]
fn bk_increasing_ratio() {
    let s = factorial_reciprocals(30);
    let r: Vec<f64> = s.iter().enumerate().map(|(n, c)| n as f64 * c).collect();
    assert_clean(&bk_ratio_probe(&r, &s, &GridSpec::linear(0.01, 0.99, 50)).unwrap());
}

#[test]
fn bk_equal_series() {
    let s = factorial_reciprocals(20);
    let r = bk_ratio_probe(&s, &s, &GridSpec::linear(0.0, 1.0, 21)).unwrap();
    assert_clean(&r);
}

#[test]
fn bk_arth_over_k_coefficients() {
    // in x = r²: arth r / r = Σ xⁿ/(2n+1) and 2K/π = Σ ((1/2)_n/n!)² xⁿ
    let n = 40;
    let arth: Vec<f64> = (0..n).map(|k| 1.0 / (2 * k + 1) as f64).collect();
    let mut k_coef = vec![1.0];
    for j in 1..n {
        let q = (j as f64 - 0.5) / j as f64;
        let prev = k_coef[j - 1];
        k_coef.push(prev * q * q);
    }
    let r = bk_ratio_probe(&arth, &k_coef, &GridSpec::linear(0.01, 0.95, 60)).unwrap();
    assert_clean(&r);
}

#[test]
fn bk_precondition_failure_is_a_note() {
    let s = [1.0, 1.0, 1.0, 1.0];
    let r = [1.0, 2.0, 1.0, 2.0];
    let rep = bk_ratio_probe(&r, &s, &GridSpec::linear(0.1, 0.9, 9)).unwrap();
    assert_eq!(rep.points, 0);
    assert!(rep.note.as_deref().unwrap().contains("precondition"));
}

#[test]
fn anderson_f_derivative_signs() {
    let grid = GridSpec::log(0.2, 50.0, 60);
    let r = derivative_sign_check(anderson_f, &grid, &[Sign::Positive, Sign::Negative, Sign::Positive]).unwrap();
    assert_clean(&r);
}

#[test]
fn derivative_signs_of_exp_decay() {
    let f = |x: f64| -> Eval { Ok((-x).exp()) };
    let grid = GridSpec::linear(0.0, 5.0, 26);
    let r = derivative_sign_check(f, &grid, &[Sign::Negative, Sign::Positive, Sign::Negative]).unwrap();
    assert_clean(&r);
    let wrong = derivative_sign_check(f, &grid, &[Sign::Positive]).unwrap();
    assert_eq!(wrong.violations.len(), 26);
}
