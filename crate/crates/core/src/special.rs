//! Gamma family, Euler–Mascheroni estimators and related one-variable functions.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::consts::{BERNOULLI_EVEN, EULER_GAMMA, LN_SQRT_2PI, LN_SQRT_PI};
use crate::dd::Dd;
use crate::error::{Result, SpecFunError};
use crate::series::{Accumulator, SeriesConfig, SeriesEval};

const ZETA_TERMS: usize = 40;

/// ζ(k) − 1 for k = 2 … ZETA_TERMS + 1 (index k − 2).
fn zeta_minus_one() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Euler–Maclaurin with cutoff N: the corrections are far below 2^-k
        // for every k in the table.
        const N: f64 = 10.0;
        let mut out = [0.0; ZETA_TERMS];
        for (idx, slot) in out.iter_mut().enumerate() {
            let s = (idx + 2) as f64;
            let mut acc = Accumulator::default();
            for n in 2..10 {
                acc.add((n as f64).powf(-s));
            }
            acc.add(N.powf(1.0 - s) / (s - 1.0));
            acc.add(0.5 * N.powf(-s));
            // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
            let mut rising = s;
            let mut fact = 2.0;
            for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
                let two_j = 2 * (j + 1);
                acc.add(b / fact * rising * N.powf(-s - two_j as f64 + 1.0));
                rising *= (s + two_j as f64 - 1.0) * (s + two_j as f64);
                fact *= (two_j + 1) as f64 * (two_j + 2) as f64;
            }
            *slot = acc.value();
        }
        out
    })
}

/// Σ_{k≥2} (−1)^k (ζ(k)−1) z^k / k for |z| ≤ 1/2.
fn zeta_tail_series(z: f64) -> f64 {
    let table = zeta_minus_one();
    let mut pow = z * z;
    let mut acc = Accumulator::default();
    for (idx, zm1) in table.iter().enumerate() {
        let k = idx + 2;
        let term = zm1 * pow / k as f64;
        acc.add(if k % 2 == 0 { term } else { -term });
        pow *= z;
    }
    acc.value()
}

/// ln Γ(1+z) for |z| ≤ 1/2, accurate in the relative sense near z = 0.
fn ln_gamma_1p_small(z: f64) -> f64 {
    -EULER_GAMMA * z + (z - z.ln_1p()) + zeta_tail_series(z)
}

/// ln Γ(2+z) for |z| ≤ 1/2.
fn ln_gamma_2p_small(z: f64) -> f64 {
    (1.0 - EULER_GAMMA) * z + zeta_tail_series(z)
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut corr = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        let two_k = 2.0 * (j + 1) as f64;
        corr += b / (two_k * (two_k - 1.0)) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma_1p_small(x) - x.ln()
    } else if x <= 1.5 {
        ln_gamma_1p_small(x - 1.0)
    } else if x <= 2.5 {
        ln_gamma_2p_small(x - 2.0)
    } else if x < 10.0 {
        let m = (x - 2.5).ceil();
        let y = x - m;
        let mut prod = 1.0;
        let mut t = y;
        while t < x - 0.5 {
            prod *= t;
            t += 1.0;
        }
        ln_gamma_2p_small(y - 2.0) + prod.ln()
    } else {
        ln_gamma_stirling(x)
    }
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(SpecFunError::domain("ln_gamma", format!("x = {x} must be > 0")));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(ln_gamma_pos(x))
}

/// sin(πx) with exact argument reduction.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// cos(πx) with exact argument reduction.
pub(crate) fn cos_pi(x: f64) -> f64 {
    let mut r = (x % 2.0).abs();
    if r > 1.0 {
        r = 2.0 - r;
    }
    if r < 0.25 {
        (PI * r).cos()
    } else {
        sin_pi(0.5 - r)
    }
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// ln |Γ(x)| for any real x that is not a pole.
pub fn ln_abs_gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(SpecFunError::domain("ln_abs_gamma", "x is NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(SpecFunError::Pole {
            op: "ln_abs_gamma",
            at: x,
        });
    }
    if x > 0.0 {
        return ln_gamma(x);
    }
    // Reflection: Γ(x)Γ(1−x) = π / sin(πx).
    Ok(PI.ln() - sin_pi(x).abs().ln() - ln_gamma_pos(1.0 - x))
}

/// Sign of Γ(x) (+1 or −1); poles report +1.
pub fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 || is_nonpositive_integer(x) {
        1.0
    } else if (x.floor() as i64).rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    }
}

/// Γ(x) for real x off the nonpositive integers.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(SpecFunError::domain("gamma", "x is NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(SpecFunError::Pole { op: "gamma", at: x });
    }
    if x > 171.7 {
        return Err(SpecFunError::computation("gamma", format!("Γ({x}) overflows")));
    }
    if x > 0.0 && x == x.floor() {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return Ok(f);
    }
    if x > 0.0 {
        // Move to (1.5, 2.5] by the recurrence; shifts by 1 are exact and the
        // double-double product keeps the rounding from growing with x.
        let mut y = x;
        let mut num = Dd::ONE;
        let mut den = 1.0;
        while y > 2.5 {
            y -= 1.0;
            num = num * y;
        }
        while y <= 1.5 {
            den *= y;
            y += 1.0;
        }
        return Ok((num * ln_gamma_2p_small(y - 2.0).exp()).to_f64() / den);
    }
    // Downward recurrence Γ(x) = Γ(x+n) / (x(x+1)…(x+n−1)).
    let mut y = x;
    let mut den = Dd::ONE;
    while y < 1.0 {
        den = den * y;
        y += 1.0;
    }
    Ok((Dd::new(gamma(y)?) / den).to_f64())
}

/// Π Γ(num_i) / Π Γ(den_j); zero when a denominator argument is a pole.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    if den.iter().any(|&d| is_nonpositive_integer(d)) {
        return Ok(0.0);
    }
    let mut ln = 0.0;
    let mut sign = 1.0;
    for &x in num {
        ln += ln_abs_gamma(x)?;
        sign *= gamma_sign(x);
    }
    for &x in den {
        ln -= ln_abs_gamma(x)?;
        sign *= gamma_sign(x);
    }
    Ok(sign * ln.exp())
}

/// Ψ(x) = d/dx ln Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(SpecFunError::domain("digamma", format!("x = {x} must be > 0")));
    }
    Ok(digamma_pos(x))
}

fn digamma_pos(x: f64) -> f64 {
    let mut shift = Accumulator::default();
    let mut y = x;
    while y < 10.0 {
        shift.add(-1.0 / y);
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut asym = y.ln() - 0.5 / y;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        asym -= b / (2.0 * (j + 1) as f64) * pow;
        pow *= inv2;
    }
    shift.add(asym);
    shift.value()
}

/// Ψ(x) for any real x off the nonpositive integers (reflection for x < 0).
pub fn digamma_any(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(SpecFunError::domain("digamma", "x is NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(SpecFunError::Pole { op: "digamma", at: x });
    }
    if x > 0.0 {
        return Ok(digamma_pos(x));
    }
    Ok(digamma_pos(1.0 - x) - PI * cos_pi(x) / sin_pi(x))
}

/// Ψ′(x) for x > 0.
pub fn trigamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(SpecFunError::domain("trigamma", format!("x = {x} must be > 0")));
    }
    let mut shift = Accumulator::default();
    let mut y = x;
    while y < 10.0 {
        shift.add(1.0 / (y * y));
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut asym = inv + 0.5 * inv2;
    for b in BERNOULLI_EVEN.iter() {
        asym += b * pow;
        pow *= inv2;
    }
    shift.add(asym);
    Ok(shift.value())
}

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b).
pub fn beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(SpecFunError::domain(
            "beta",
            format!("arguments ({a}, {b}) must be > 0"),
        ));
    }
    Ok((ln_gamma_pos(a) + ln_gamma_pos(b) - ln_gamma_pos(a + b)).exp())
}

/// Shifted factorial (a, n) = a(a+1)…(a+n−1); (a, 0) = 1.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..n {
        p *= a + i as f64;
        if p == 0.0 {
            break;
        }
    }
    p
}

/// R_n = Σ_{k≤n} 1/k − ln(n + 1/2).
pub fn detemple_r(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(SpecFunError::domain("detemple_r", "n must be ≥ 1"));
    }
    let mut acc = Accumulator::default();
    for k in (1..=n).rev() {
        acc.add(1.0 / k as f64);
    }
    acc.add(-(n as f64 + 0.5).ln());
    Ok(acc.value())
}

/// R_n − γ, evaluated without cancellation for large n.
pub fn detemple_excess(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(SpecFunError::domain("detemple_excess", "n must be ≥ 1"));
    }
    if n < 16 {
        return Ok(detemple_r(n)? - EULER_GAMMA);
    }
    // H_n = γ + Ψ(m + 1/2) with m = n + 1/2, and
    // Ψ(m + 1/2) − ln m ~ Σ (1 − 2^{1−2k}) B_{2k} / (2k m^{2k}).
    let m = n as f64 + 0.5;
    let inv2 = 1.0 / (m * m);
    let mut pow = inv2;
    let mut sum = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().take(9).enumerate() {
        let k = (j + 1) as i32;
        sum += (1.0 - 2f64.powi(1 - 2 * k)) * b / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    Ok(sum)
}

/// H(n) = n²(R_n − γ).
pub fn big_h(n: u64) -> Result<f64> {
    let nf = n as f64;
    Ok(nf * nf * detemple_excess(n)?)
}

/// Estimate of γ with its rigorous error bound c_k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaEstimate {
    pub estimate: f64,
    /// c_k = 2/(12k)! + 2k²e^{−k}.
    pub error_bound: f64,
    pub k: u32,
}

/// γ ≈ 1 − ln k · Σ d(k,r) + Σ d(k,r)/(r+1), r = 1 … 12k+1.
pub fn karatsuba_gamma_estimate(k: u32) -> Result<GammaEstimate> {
    const OP: &str = "karatsuba_gamma_estimate";
    if k < 1 {
        return Err(SpecFunError::domain(OP, "k must be ≥ 1"));
    }
    let kf = k as f64;
    let r_max = 12 * k + 1;
    // d(k,1) = k²/2, d(k,r+1) = d(k,r)·(−k)(r+1)/(r(r+2)).
    let mut d = Dd::new(kf * kf) / 2.0;
    let mut s1 = Dd::ZERO;
    let mut s2 = Dd::ZERO;
    for r in 1..=r_max {
        let rf = r as f64;
        if !d.is_finite() {
            return Err(SpecFunError::computation(OP, format!("d({k},{r}) overflowed")));
        }
        s1 = s1 + d;
        s2 = s2 + d / (rf + 1.0);
        d = d * (-kf * (rf + 1.0)) / (rf * (rf + 2.0));
    }
    let estimate = (Dd::ONE - s1 * kf.ln() + s2).to_f64();
    let factorial_part = (std::f64::consts::LN_2 - ln_gamma_pos(12.0 * kf + 1.0)).exp();
    let error_bound = factorial_part + 2.0 * kf * kf * (-kf).exp();
    if !estimate.is_finite() || !error_bound.is_finite() {
        return Err(SpecFunError::computation(OP, "non-finite result"));
    }
    Ok(GammaEstimate {
        estimate,
        error_bound,
        k,
    })
}

/// f(x) = ln Γ(x+1) / (x ln x); the removable singularity at x = 1 returns 1 − γ.
pub fn anderson_f(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(SpecFunError::domain("anderson_f", format!("x = {x} must be > 0")));
    }
    if x == 1.0 {
        return Ok(1.0 - EULER_GAMMA);
    }
    let ln_x = if (0.5..2.0).contains(&x) {
        (x - 1.0).ln_1p()
    } else {
        x.ln()
    };
    Ok(ln_gamma_pos(x + 1.0) / (x * ln_x))
}

const LEMMA_G_DIRECT: u32 = 63;

/// g(x) = Σ_{n≥1} (n − x)/(n + x)³ for x > −1.
///
/// Sums the first 63 terms directly and the rest by Euler–Maclaurin.
pub fn lemma_g(x: f64) -> Result<SeriesEval> {
    if !(x > -1.0) || !x.is_finite() {
        return Err(SpecFunError::domain("lemma_g", format!("x = {x} must be > −1")));
    }
    let mut acc = Accumulator::default();
    for n in 1..=LEMMA_G_DIRECT {
        let u = n as f64 + x;
        acc.add((n as f64 - x) / (u * u * u));
    }
    let n0 = (LEMMA_G_DIRECT + 1) as f64;
    let s = n0 + x;
    // f(t) = (t+x)^{-2} − 2x(t+x)^{-3}
    // f^{(m)}(t) = (−1)^m (m+1)! [u^{−2−m} − x(m+2)u^{−3−m}],  u = t + x.
    let deriv = |m: i32| -> f64 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let fact: f64 = (2..=m + 1).map(f64::from).product();
        sign * fact * (s.powi(-2 - m) - x * (m + 2) as f64 * s.powi(-3 - m))
    };
    acc.add(1.0 / s - x / (s * s));
    acc.add(0.5 * deriv(0));
    let mut fact = 2.0;
    for j in 1..=4 {
        let two_j = 2 * j;
        acc.add(-BERNOULLI_EVEN[j - 1] / fact * deriv(two_j as i32 - 1));
        fact *= (two_j + 1) as f64 * (two_j + 2) as f64;
    }
    let est_error = (BERNOULLI_EVEN[4] / fact * deriv(9)).abs();
    let value = acc.value();
    let cfg = SeriesConfig::default();
    Ok(SeriesEval {
        value,
        terms_used: LEMMA_G_DIRECT as usize + 5,
        est_error,
        converged: est_error <= cfg.tolerance.max(1e-16) * value.abs().max(1.0),
    })
}

/// h(x) = x²Ψ′(1+x) − xΨ(1+x) + ln Γ(1+x) for x > −1.
pub fn lemma_h(x: f64) -> Result<f64> {
    if !(x > -1.0) {
        return Err(SpecFunError::domain("lemma_h", format!("x = {x} must be > −1")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let y = 1.0 + x;
    Ok(x * x * trigamma(y)? - x * digamma_pos(y) + ln_gamma_pos(y))
}

/// H(x) = G(x)^6 − 8x³ − 4x² − x with G(x) = (e/x)^x Γ(1+x)/√π.
pub fn ramanujan_h(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(SpecFunError::domain("ramanujan_h", format!("x = {x} must be ≥ 0")));
    }
    if x == 0.0 {
        return Ok(PI.powi(-3));
    }
    if x.is_infinite() {
        return Ok(1.0 / 30.0);
    }
    if x < 8.0 {
        let ln_g = x * (1.0 - x.ln()) + ln_gamma_pos(1.0 + x) - LN_SQRT_PI;
        return Ok((6.0 * ln_g).exp() - ((8.0 * x + 4.0) * x + 1.0) * x);
    }
    // G^6 = 8x³ e^u with u = 6μ(x), μ the Binet remainder. Writing
    // v = u − 1/(2x) removes the cancellation against 4x² + x.
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut v = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().skip(1) {
        let two_k = 2.0 * (j + 1) as f64;
        v += 6.0 * b / (two_k * (two_k - 1.0)) * pow;
        pow *= inv2;
    }
    let u = v + 0.5 * inv;
    // R = Σ_{k≥4} u^k / k!
    let mut term = u * u * u / 6.0;
    let mut rest = 0.0;
    for k in 4..30 {
        term *= u / k as f64;
        rest += term;
        if term.abs() < 1e-18 * rest.abs() {
            break;
        }
    }
    let x2 = x * x;
    let x3 = x2 * x;
    Ok(8.0 * x3 * v + 4.0 * x2 * v + 4.0 * x3 * v * v + 8.0 * x3 * (u * u * u / 6.0 + rest))
}

/// θ_x = 30·H(x); θ_0 = 30/π³ and θ_∞ = 1.
pub fn ramanujan_theta(x: f64) -> Result<f64> {
    Ok(30.0 * ramanujan_h(x)?)
}

/// Coefficients of x⁰ … x⁻⁶ following 8x³ + 4x² + x in the sixth-power expansion of Γ(x+1).
pub const KARATSUBA_COEFFS: [f64; 7] = [
    1.0 / 30.0,
    -11.0 / 240.0,
    79.0 / 3360.0,
    3539.0 / 201600.0,
    -9511.0 / 403200.0,
    -10051.0 / 716800.0,
    47474887.0 / 1277337600.0,
];

/// Γ(x+1) ≈ √π (x/e)^x (8x³ + 4x² + x + Σ_{j<n} a_j x^{−j})^{1/6}.
pub fn karatsuba_asymptotic_gamma(x: f64, n_terms: usize) -> Result<f64> {
    const OP: &str = "karatsuba_asymptotic_gamma";
    if !(1..=KARATSUBA_COEFFS.len()).contains(&n_terms) {
        return Err(SpecFunError::config(
            OP,
            format!("n_terms = {n_terms} outside [1, {}]", KARATSUBA_COEFFS.len()),
        ));
    }
    if !(x >= 1.0) {
        return Err(SpecFunError::domain(OP, format!("x = {x} must be ≥ 1")));
    }
    let inv = 1.0 / x;
    let mut tail = 0.0;
    let mut pow = 1.0;
    for c in &KARATSUBA_COEFFS[..n_terms] {
        tail += c * pow;
        pow *= inv;
    }
    let poly = ((8.0 * x + 4.0) * x + 1.0) * x + tail;
    let ln_val = LN_SQRT_PI + x * (x.ln() - 1.0) + poly.ln() / 6.0;
    let val = ln_val.exp();
    if !val.is_finite() {
        return Err(SpecFunError::computation(OP, "result overflows"));
    }
    Ok(val)
}

/// Ω_n including n = 0 (Ω_0 = 1).
pub(crate) fn ball_volume_any(n: u32) -> f64 {
    let h = 0.5 * n as f64;
    (h * PI.ln() - ln_gamma_pos(h + 1.0)).exp()
}

/// Volume Ω_n = π^{n/2}/Γ(n/2 + 1) of the unit ball in ℝⁿ.
pub fn ball_volume(n: u32) -> Result<f64> {
    if n < 1 {
        return Err(SpecFunError::domain("ball_volume", "n must be ≥ 1"));
    }
    Ok(ball_volume_any(n))
}

/// Surface area ω_{n−1} = nΩ_n of the unit sphere in ℝⁿ.
pub fn sphere_area(n: u32) -> Result<f64> {
    Ok(n as f64 * ball_volume(n)?)
}

/// Berg–Pedersen density: for t ∈ (k−1, k),
/// H(t) = t(L + (k−1)ln t)/(L² + (k−1)²π²) with L = ln|Γ(1−t)|; zero at positive integers.
pub fn berg_pedersen_density(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(SpecFunError::domain(
            "berg_pedersen_density",
            format!("t = {t} must be finite and > 0"),
        ));
    }
    if t == t.floor() {
        return Ok(0.0);
    }
    let km1 = t.ceil() - 1.0;
    // near 0, forming 1 − t first would cost ~ε/t of relative accuracy
    let l = if t <= 0.5 {
        ln_gamma_1p_small(-t)
    } else {
        ln_abs_gamma(1.0 - t)?
    };
    let num = l + km1 * t.ln();
    Ok(t * num / (l * l + km1 * km1 * PI * PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn zeta_table_known_values() {
        let t = zeta_minus_one();
        assert!(rel(t[0], PI * PI / 6.0 - 1.0) < 1e-15);
        assert!(rel(t[2], PI.powi(4) / 90.0 - 1.0) < 1e-14);
        // ζ(3) − 1
        assert!(rel(t[1], 0.202_056_903_159_594_3) < 1e-14);
    }

    #[test]
    fn ln_gamma_anchor_points() {
        assert!((ln_gamma(0.5).unwrap() - LN_SQRT_PI).abs() < 1e-15);
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        assert!(rel(ln_gamma(5.0).unwrap(), 24f64.ln()) < 1e-15);
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
    }

    #[test]
    fn ln_gamma_seams_are_continuous() {
        for &s in &[0.5, 1.5, 2.5, 10.0] {
            let lo = ln_gamma(s - 1e-12).unwrap();
            let hi = ln_gamma(s + 1e-12).unwrap();
            let mid = ln_gamma(s).unwrap();
            assert!((lo - mid).abs() < 1e-11 && (hi - mid).abs() < 1e-11, "seam {s}");
        }
    }

    #[test]
    fn gamma_special_values() {
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-15);
        assert_eq!(gamma(6.0).unwrap(), 120.0);
        assert!(rel(gamma(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-15);
        assert!(matches!(gamma(-3.0), Err(SpecFunError::Pole { .. })));
        assert!(matches!(gamma(0.0), Err(SpecFunError::Pole { .. })));
    }

    #[test]
    fn ln_abs_gamma_negative_matches_gamma() {
        for &x in &[-0.5, -1.3, -2.7, -7.25] {
            let g = gamma(x).unwrap();
            assert!((ln_abs_gamma(x).unwrap() - g.abs().ln()).abs() < 1e-13, "x={x}");
            assert_eq!(gamma_sign(x), g.signum(), "x={x}");
        }
    }

    #[test]
    fn digamma_special_values() {
        assert!(rel(digamma(1.0).unwrap(), -EULER_GAMMA) < 1e-14);
        let half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!(rel(digamma(0.5).unwrap(), half) < 1e-14);
        assert!(rel(digamma(2.0).unwrap(), 1.0 - EULER_GAMMA) < 1e-14);
        assert!(digamma(0.0).is_err());
        // reflection
        let r = digamma_any(-0.5).unwrap();
        assert!(rel(r, digamma(1.5).unwrap()) < 1e-14);
    }

    #[test]
    fn trigamma_values() {
        let z2 = PI * PI / 6.0;
        assert!(rel(trigamma(1.0).unwrap(), z2) < 1e-14);
        assert!(rel(trigamma(2.0).unwrap(), z2 - 1.0) < 1e-14);
        assert!(rel(trigamma(1e8).unwrap() * 1e8, 1.0) < 1e-7);
    }

    #[test]
    fn beta_and_pochhammer() {
        assert!(rel(beta(1.0, 1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-14);
        assert!(rel(beta(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-14);
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(0.7, 0), 1.0);
        assert_eq!(pochhammer(-2.0, 4), 0.0);
    }

    #[test]
    fn detemple_small_n() {
        assert!((detemple_r(1).unwrap() - (1.0 - 1.5f64.ln())).abs() < 1e-15);
        assert!((detemple_excess(1).unwrap() - 0.017_319_226_990_3).abs() < 1e-12);
        assert!(detemple_r(0).is_err());
    }

    #[test]
    fn detemple_asymptotic_matches_direct_at_switch() {
        for n in [16u64, 20, 40, 100] {
            let direct = detemple_r(n).unwrap() - EULER_GAMMA;
            let asym = detemple_excess(n).unwrap();
            assert!((direct - asym).abs() < 2e-15, "n={n}");
        }
    }

    #[test]
    fn karatsuba_bound_small_k() {
        let e = karatsuba_gamma_estimate(1).unwrap();
        assert!((e.error_bound - 0.735_758_886_5).abs() < 1e-9);
        assert!((e.estimate - EULER_GAMMA).abs() <= e.error_bound);
        let e5 = karatsuba_gamma_estimate(5).unwrap();
        assert!((e5.error_bound - 0.336_897_350_0).abs() < 1e-9);
    }

    #[test]
    fn anderson_f_values() {
        assert_eq!(anderson_f(1.0).unwrap(), 1.0 - EULER_GAMMA);
        assert!((anderson_f(2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((anderson_f(1.0 + 1e-9).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-8);
    }

    #[test]
    fn lemma_g_zero_is_basel() {
        let g = lemma_g(0.0).unwrap();
        assert!(g.converged);
        assert!((g.value - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn lemma_h_values() {
        assert_eq!(lemma_h(0.0).unwrap(), 0.0);
        let want = PI * PI / 6.0 - 1.0 - (1.0 - EULER_GAMMA);
        assert!(rel(lemma_h(1.0).unwrap(), want) < 1e-13);
        assert!(lemma_h(-0.5).unwrap() > 0.0);
    }

    #[test]
    fn theta_endpoints() {
        assert!((ramanujan_theta(0.0).unwrap() - 30.0 / PI.powi(3)).abs() < 1e-15);
        assert!((ramanujan_theta(1.0).unwrap() - 0.335_928_74).abs() < 1e-7);
        assert!((ramanujan_theta(1e6).unwrap() - 0.999_998_625).abs() < 1e-8);
    }

    #[test]
    fn theta_branches_agree_at_switch() {
        let below = ramanujan_h(8.0 - 1e-9).unwrap();
        let above = ramanujan_h(8.0).unwrap();
        assert!((below - above).abs() < 1e-10);
    }

    #[test]
    fn karatsuba_asymptotic_gamma_at_ten() {
        let v = karatsuba_asymptotic_gamma(10.0, 7).unwrap();
        assert!(rel(v, 3_628_800.0) < 1e-9);
        assert!(matches!(
            karatsuba_asymptotic_gamma(10.0, 8),
            Err(SpecFunError::Config { .. })
        ));
        assert!(karatsuba_asymptotic_gamma(10.0, 0).is_err());
    }

    #[test]
    fn ball_volumes() {
        assert!(rel(ball_volume(2).unwrap(), PI) < 1e-15);
        assert!(rel(ball_volume(3).unwrap(), 4.0 * PI / 3.0) < 1e-15);
        assert!(rel(sphere_area(3).unwrap(), 4.0 * PI) < 1e-15);
        assert!(ball_volume(0).is_err());
        assert_eq!(ball_volume_any(0), 1.0);
    }

    #[test]
    fn berg_pedersen_values() {
        assert_eq!(berg_pedersen_density(2.0).unwrap(), 0.0);
        assert!((berg_pedersen_density(1e-8).unwrap() - 1.0 / EULER_GAMMA).abs() < 1e-6);
        assert!((berg_pedersen_density(1e-12).unwrap() - 1.0 / EULER_GAMMA).abs() < 1e-10);
        let half = berg_pedersen_density(0.5).unwrap();
        assert!(rel(half, 0.5 / LN_SQRT_PI) < 1e-14);
        assert!(berg_pedersen_density(0.0).is_err());
    }
}
