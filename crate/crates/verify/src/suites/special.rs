//! Gamma-function inequalities, Euler–Mascheroni brackets, ball volumes.

use std::f64::consts::PI;

use specfun_core::consts::EULER_GAMMA;
use specfun_core::special::{berg_pedersen_density, big_h, detemple_excess, ln_gamma, ramanujan_theta};
use specfun_core::SpecFunError;

use super::{as_index, suite, Suite};
use crate::grid::GridSpec;
use crate::report::Sample;

/// Ramanujan's four-decimal table of θ_x at x = 0, 1/12, …, 1.
pub const THETA_TABLE: [f64; 13] = [
    0.9675, 0.8071, 0.6160, 0.4867, 0.4029, 0.3509, 0.3207, 0.3058, 0.3014, 0.3041, 0.3118, 0.3227,
    0.3359,
];
pub const THETA_TOLERANCE: f64 = 5e-5;

fn at_one(x: f64) -> bool {
    x == 1.0
}

/// Two-sided bound lo·ln x ≤ ln Γ(x) ≤ hi·ln x with exponents given as
/// functions of x; margins are normalised by max(1, |ln Γ(x)|).
fn log_sandwich(x: f64, lower: f64, upper: f64) -> Result<Sample, SpecFunError> {
    let lg = ln_gamma(x)?;
    let lx = x.ln();
    let (lo, hi) = (lower * lx, upper * lx);
    let scale = lg.abs().max(1.0);
    let (m_lo, m_hi) = ((lg - lo) / scale, (hi - lg) / scale);
    Ok(if m_lo <= m_hi {
        Sample::with_sides(m_lo, lg, lo)
    } else {
        Sample::with_sides(m_hi, lg, hi)
    })
}

fn eq22(x: f64) -> Result<Sample, SpecFunError> {
    log_sandwich(x, (1.0 - EULER_GAMMA) * x - 1.0, x - 1.0)
}

const ZETA2: f64 = PI * PI / 6.0;

fn eq210_unit(x: f64) -> Result<Sample, SpecFunError> {
    let (alpha, beta) = (1.0 - EULER_GAMMA, 0.5 * (ZETA2 - EULER_GAMMA));
    // on (0, 1) ln x < 0, so the exponent bounds swap roles
    log_sandwich(x, alpha * (x - 1.0) - EULER_GAMMA, beta * (x - 1.0) - EULER_GAMMA)
}

fn eq210_tail(x: f64) -> Result<Sample, SpecFunError> {
    let (alpha, beta) = (0.5 * (ZETA2 - EULER_GAMMA), 1.0);
    log_sandwich(x, alpha * (x - 1.0) - EULER_GAMMA, beta * (x - 1.0) - EULER_GAMMA)
}

fn detemple(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("detemple", x, 1)?;
    let e = detemple_excess(n)?;
    let nf = n as f64;
    let scaled = 24.0 * nf * nf * e;
    let ratio = nf / (nf + 1.0);
    let lower = scaled - ratio * ratio;
    let upper = 1.0 - scaled;
    Ok(if lower <= upper {
        Sample::with_sides(lower, e, 1.0 / (24.0 * (nf + 1.0) * (nf + 1.0)))
    } else {
        Sample::with_sides(upper, e, 1.0 / (24.0 * nf * nf))
    })
}

fn big_h_step(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("bigH-monotone", x, 1)?;
    let (h0, h1) = (big_h(n)?, big_h(n + 1)?);
    Ok(Sample::with_sides((h1 - h0) / h1, h1, h0))
}

fn theta_table(x: f64) -> Result<Sample, SpecFunError> {
    let k = (12.0 * x).round();
    if !(0.0..=12.0).contains(&k) || (12.0 * x - k).abs() > 1e-9 {
        return Err(SpecFunError::Domain {
            op: "theta-table",
            detail: format!("no tabulated value at x = {x}"),
        });
    }
    let theta = ramanujan_theta(k / 12.0)?;
    let table = THETA_TABLE[k as usize];
    Ok(Sample::with_sides(THETA_TOLERANCE - (theta - table).abs(), theta, table))
}

/// ln Ω_n, with Ω_0 = 1.
fn ln_omega(n: u64) -> Result<f64, SpecFunError> {
    let h = 0.5 * n as f64;
    Ok(h * PI.ln() - ln_gamma(h + 1.0)?)
}

fn two_sided(lower: (f64, f64, f64), upper: (f64, f64, f64)) -> Sample {
    // (margin, lhs, rhs)
    let pick = if lower.0 <= upper.0 { lower } else { upper };
    Sample::with_sides(pick.0, pick.1, pick.2)
}

fn alzer_ball_1(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("alzer-ball(1)", x, 1)?;
    let (l0, l1) = (ln_omega(n)?, ln_omega(n + 1)?);
    let nf = n as f64;
    let scaled = nf / (nf + 1.0) * l1;
    let ln_a = (2.0 / PI.sqrt()).ln();
    let ln_b = 0.5;
    Ok(two_sided(
        (l0 - ln_a - scaled, l0, ln_a + scaled),
        (ln_b + scaled - l0, l0, ln_b + scaled),
    ))
}

fn alzer_ball_2(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("alzer-ball(2)", x, 1)?;
    let rho = ln_omega(n - 1)? - ln_omega(n)?;
    let nf = n as f64;
    let (a, b) = (0.5, PI / 2.0 - 1.0);
    let lo = 0.5 * ((nf + a) / (2.0 * PI)).ln();
    let hi = 0.5 * ((nf + b) / (2.0 * PI)).ln();
    Ok(two_sided((rho - lo, rho, lo), (hi - rho, rho, hi)))
}

fn alzer_ball_3(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("alzer-ball(3)", x, 1)?;
    let q = 2.0 * ln_omega(n)? - ln_omega(n - 1)? - ln_omega(n + 1)?;
    let step = (1.0 / n as f64).ln_1p();
    let (alpha, beta) = (2.0 - PI.ln() / 2f64.ln(), 0.5);
    Ok(two_sided(
        (q - alpha * step, q, alpha * step),
        (beta * step - q, q, beta * step),
    ))
}

fn omega_decreasing(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("omega-decreasing", x, 7)?;
    let (l0, l1, l2) = (ln_omega(n)?, ln_omega(n + 1)?, ln_omega(n + 2)?);
    // ω_n = (n+1)Ω_{n+1}
    let nf = n as f64;
    let w0 = (nf + 1.0).ln() + l1;
    let w1 = (nf + 2.0).ln() + l2;
    Ok(two_sided((l0 - l1, l0, l1), (w0 - w1, w0, w1)))
}

fn berg_pedersen_limit(t: f64) -> Result<Sample, SpecFunError> {
    let h = berg_pedersen_density(t)?;
    let limit = 1.0 / EULER_GAMMA;
    Ok(Sample::with_sides(1e-6 - (h - limit).abs(), h, limit))
}

pub(super) fn suites() -> Vec<Suite> {
    vec![
        suite(
            "eq2.2",
            "x^((1-γ)x-1) < Γ(x) < x^(x-1) on (1, 100], compared in log space",
            GridSpec::log(1.0, 100.0, 200),
            0.0,
            true,
            eq22,
        )
        .equality(at_one, 1e-14, "x = 1, both sides equal 1"),
        suite(
            "eq2.10(0,1)",
            "x^(α(x-1)-γ) < Γ(x) < x^(β(x-1)-γ) on (0, 1) with α = 1-γ, β = (π²/6-γ)/2",
            GridSpec::logit(0.0, 1.0, 200),
            0.0,
            true,
            eq210_unit,
        ),
        suite(
            "eq2.10(1,∞)",
            "x^(α(x-1)-γ) < Γ(x) < x^(β(x-1)-γ) on (1, 10⁴] with α = (π²/6-γ)/2, β = 1",
            GridSpec::log(1.0, 1e4, 200),
            0.0,
            true,
            eq210_tail,
        )
        .equality(at_one, 1e-14, "x = 1, both sides equal 1"),
        suite(
            "detemple",
            "1/(24(n+1)²) < R_n - γ < 1/(24n²), margins scaled by 24n²",
            GridSpec::linear(1.0, 1e4, 10_000),
            0.0,
            true,
            detemple,
        )
        .integer(),
        suite(
            "bigH-monotone",
            "H(n) = n²(R_n - γ) strictly increasing; margin (H(n+1) - H(n))/H(n+1)",
            GridSpec::linear(1.0, 1e4, 10_000),
            0.0,
            true,
            big_h_step,
        )
        .integer(),
        suite(
            "theta-table",
            "θ_x against Ramanujan's four-decimal table at x = k/12; margin 5e-5 - |θ - table|",
            GridSpec::linear(0.0, 1.0, 13),
            0.0,
            false,
            theta_table,
        ),
        suite(
            "alzer-ball(1)",
            "a·Ω_{n+1}^{n/(n+1)} ≤ Ω_n ≤ b·Ω_{n+1}^{n/(n+1)}, a = 2/√π, b = √e (log margins)",
            GridSpec::linear(1.0, 200.0, 200),
            0.0,
            false,
            alzer_ball_1,
        )
        .integer()
        .equality(at_one, 1e-14, "n = 1, lower bound attained"),
        suite(
            "alzer-ball(2)",
            "√((n+A)/2π) ≤ Ω_{n-1}/Ω_n ≤ √((n+B)/2π), A = 1/2, B = π/2 - 1 (log margins)",
            GridSpec::linear(1.0, 200.0, 200),
            0.0,
            false,
            alzer_ball_2,
        )
        .integer()
        .equality(at_one, 1e-14, "n = 1, upper bound attained"),
        suite(
            "alzer-ball(3)",
            "(1+1/n)^α ≤ Ω_n²/(Ω_{n-1}Ω_{n+1}) ≤ (1+1/n)^β, α = 2 - log π/log 2, β = 1/2 (log margins)",
            GridSpec::linear(1.0, 200.0, 200),
            0.0,
            false,
            alzer_ball_3,
        )
        .integer()
        .equality(at_one, 1e-14, "n = 1, lower bound attained"),
        suite(
            "omega-decreasing",
            "Ω_n and ω_n strictly decreasing for n ≥ 7 (log differences)",
            GridSpec::linear(7.0, 200.0, 194),
            0.0,
            true,
            omega_decreasing,
        )
        .integer(),
        suite(
            "berg-pedersen-limit",
            "Berg–Pedersen density H(t) within 1e-6 of 1/γ as t → 0⁺",
            GridSpec::log(1e-12, 1e-8, 50),
            0.0,
            false,
            berg_pedersen_limit,
        ),
    ]
}
