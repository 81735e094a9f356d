//! Complete and generalized elliptic integrals, the Grötzsch ring modulus
//! μ and its inverse, the distortion function φ_K, and margin computations
//! for the classical identities and bounds.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::sync::OnceLock;

use crate::consts::LN_16;
use crate::dd::Dd;
use crate::error::{Result, SpecFunError};
use crate::hypergeo::{
    gauss_2f1, gauss_2f1_at_complement, gauss_2f1_derivative, gauss_2f1_derivative_at_complement,
    gauss_value_at_1, zero_balanced_r, HypTriple,
};
use crate::maclaurin::PowerSeries;
use crate::means::{agm_value, MeanPair};
use crate::quad::tanh_sinh;
use crate::residual::Residual;
use crate::special::{beta, sin_pi};

pub use crate::means::AgmTrace;

/// Below this modulus the bound margins come from exact Maclaurin series.
const SERIES_CUTOVER: f64 = 0.5;

/// Elliptic modulus r with its complement r′ = √(1 − r²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    r: f64,
    r_prime: f64,
}

impl Modulus {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(SpecFunError::domain("modulus", format!("r = {r} outside [0, 1]")));
        }
        Ok(Modulus {
            r,
            r_prime: ((1.0 - r) * (1.0 + r)).sqrt(),
        })
    }

    /// The modulus whose complement is `r_prime`; keeps r′ exact near r = 1.
    pub fn from_complement(r_prime: f64) -> Result<Self> {
        Ok(Modulus::new(r_prime)?.complement())
    }

    /// Both values given; they must satisfy r² + r′² = 1 to 1e−15.
    pub fn from_pair(r: f64, r_prime: f64) -> Result<Self> {
        let ok = (0.0..=1.0).contains(&r) && (0.0..=1.0).contains(&r_prime) && {
            let s = Dd::prod(r, r) + Dd::prod(r_prime, r_prime) - Dd::ONE;
            s.to_f64().abs() <= 1e-15
        };
        if !ok {
            return Err(SpecFunError::domain(
                "modulus",
                format!("({r}, {r_prime}) is not a modulus/complement pair"),
            ));
        }
        Ok(Modulus { r, r_prime })
    }

    pub fn complement(&self) -> Self {
        Modulus {
            r: self.r_prime,
            r_prime: self.r,
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_prime(&self) -> f64 {
        self.r_prime
    }

    fn is_interior(&self) -> bool {
        self.r > 0.0 && self.r_prime > 0.0
    }
}

/// F(a, b; c; r²), using 1 − r′² when r is the larger of the pair.
fn hyp_sq(t: &HypTriple, r: f64, r_prime: f64) -> Result<f64> {
    if r <= r_prime {
        Ok(gauss_2f1(t, r * r)?.value)
    } else if r_prime * r_prime == 0.0 {
        // r′² underflows: only a finite value at z = 1 is meaningful
        gauss_value_at_1(t).map_err(|_| SpecFunError::Boundary { op: "gauss_2f1", at: r })
    } else {
        Ok(gauss_2f1_at_complement(t, r_prime * r_prime)?.value)
    }
}

/// dᵏF/dzᵏ at z = r².
fn hyp_sq_derivative(t: &HypTriple, m: Modulus, order: u32) -> Result<f64> {
    if m.r <= m.r_prime {
        gauss_2f1_derivative(t, m.r * m.r, order)
    } else {
        gauss_2f1_derivative_at_complement(t, m.r_prime * m.r_prime, order)
    }
}

fn check_a(op: &'static str, a: f64) -> Result<()> {
    if a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(SpecFunError::parameter(op, format!("a = {a} outside (0, 1)")))
    }
}

fn check_interior(op: &'static str, m: Modulus) -> Result<()> {
    if m.is_interior() {
        Ok(())
    } else {
        Err(SpecFunError::Boundary { op, at: m.r })
    }
}

/// K from the complementary modulus alone: π/(2·AGM(1, r′)).
fn k_from_complement(op: &'static str, r_prime: f64) -> Result<f64> {
    if r_prime <= 0.0 {
        return Err(SpecFunError::Boundary { op, at: 1.0 });
    }
    Ok(FRAC_PI_2 / agm_value(MeanPair::new(1.0, r_prime)?))
}

/// K(r) via the arithmetic-geometric mean.
pub fn ellint_k(m: Modulus) -> Result<f64> {
    k_from_complement("ellint_k", m.r_prime)
}

/// K(r) = (π/2) F(1/2, 1/2; 1; r²); kept as an independent route.
pub fn ellint_k_series(m: Modulus) -> Result<f64> {
    if m.r_prime == 0.0 {
        return Err(SpecFunError::Boundary {
            op: "ellint_k_series",
            at: 1.0,
        });
    }
    Ok(FRAC_PI_2 * hyp_sq(&HypTriple::new(0.5, 0.5, 1.0)?, m.r, m.r_prime)?)
}

/// E(r) = (π/2) F(1/2, −1/2; 1; r²); E(1) = 1.
pub fn ellint_e(m: Modulus) -> Result<f64> {
    if m.r_prime == 0.0 {
        return Ok(1.0);
    }
    Ok(FRAC_PI_2 * hyp_sq(&HypTriple::new(0.5, -0.5, 1.0)?, m.r, m.r_prime)?)
}

/// K′(r) = K(r′).
pub fn ellint_kp(m: Modulus) -> Result<f64> {
    ellint_k(m.complement())
}

/// E′(r) = E(r′).
pub fn ellint_ep(m: Modulus) -> Result<f64> {
    ellint_e(m.complement())
}

/// K_a(r) = (π/2) F(a, 1−a; 1; r²).
pub fn gen_k(a: f64, m: Modulus) -> Result<f64> {
    check_a("gen_k", a)?;
    if m.r_prime == 0.0 {
        return Err(SpecFunError::Boundary { op: "gen_k", at: 1.0 });
    }
    Ok(FRAC_PI_2 * hyp_sq(&HypTriple::new(a, 1.0 - a, 1.0)?, m.r, m.r_prime)?)
}

/// E_a(r) = (π/2) F(a−1, 1−a; 1; r²); E_a(1) = sin(πa)/(2(1−a)).
pub fn gen_e(a: f64, m: Modulus) -> Result<f64> {
    check_a("gen_e", a)?;
    if m.r_prime == 0.0 {
        return Ok(sin_pi(a) / (2.0 * (1.0 - a)));
    }
    Ok(FRAC_PI_2 * hyp_sq(&HypTriple::new(a - 1.0, 1.0 - a, 1.0)?, m.r, m.r_prime)?)
}

/// K_a(r) from its integral representation
/// sin(πa) ∫₀^{π/2} (tan t)^{1−2a} (1 − r² sin²t)^{−a} dt.
pub fn gen_k_quadrature(a: f64, m: Modulus) -> Result<f64> {
    const OP: &str = "gen_k_quadrature";
    check_a(OP, a)?;
    if m.r_prime == 0.0 {
        return Err(SpecFunError::Boundary { op: OP, at: 1.0 });
    }
    let rp2 = m.r_prime * m.r_prime;
    let f = |_t: f64, left: f64, right: f64| {
        // t = left from 0, π/2 − t = right; pick the accurate side
        let (ln_tan, sin2, cos2) = if left <= right {
            let (s, c) = left.sin_cos();
            (left.tan().ln(), s * s, c * c)
        } else {
            let (s, c) = right.sin_cos();
            (-right.tan().ln(), c * c, s * s)
        };
        // 1 − r² sin²t = cos²t + r′² sin²t, free of cancellation
        let base = cos2 + rp2 * sin2;
        ((1.0 - 2.0 * a) * ln_tan - a * base.ln()).exp()
    };
    let q = tanh_sinh(f, 0.0, FRAC_PI_2, 1e-10, 12).map_err(|e| match e {
        SpecFunError::Quadrature {
            levels,
            estimate,
            est_error,
            ..
        } => SpecFunError::Quadrature {
            op: OP,
            levels,
            estimate,
            est_error,
        },
        other => other,
    })?;
    Ok(sin_pi(a) * q.value)
}

/// μ(r) = πK′(r)/(2K(r)), the modulus of the Grötzsch ring.
pub fn mu(m: Modulus) -> Result<f64> {
    check_interior("mu", m)?;
    // K′/K = AGM(1, r′)/AGM(1, r)
    let num = agm_value(MeanPair::new(1.0, m.r_prime)?);
    let den = agm_value(MeanPair::new(1.0, m.r)?);
    Ok(FRAC_PI_2 * num / den)
}

/// μ_a(r) = π K_a′(r) / (2 sin(πa) K_a(r)).
pub fn mu_a(a: f64, m: Modulus) -> Result<f64> {
    check_a("mu_a", a)?;
    check_interior("mu_a", m)?;
    Ok(PI / (2.0 * sin_pi(a)) * gen_k(a, m.complement())? / gen_k(a, m)?)
}

/// The modulus r with μ(r) = y.
///
/// Bisection in ln r; for y ≥ π/2 the root lies in [2e^{−y}, min(4e^{−y}, 1/√2)],
/// smaller y are mapped there by μ(r)μ(r′) = π²/4.
pub fn mu_inverse(y: f64) -> Result<Modulus> {
    const OP: &str = "mu_inverse";
    if !(y > 0.0 && y.is_finite()) {
        return Err(SpecFunError::domain(OP, format!("y = {y} must be positive and finite")));
    }
    if y < FRAC_PI_2 {
        let rp = mu_inverse_upper(PI * PI / (4.0 * y))?;
        return Modulus::from_complement(rp);
    }
    Modulus::new(mu_inverse_upper(y)?)
}

fn mu_inverse_upper(y: f64) -> Result<f64> {
    const OP: &str = "mu_inverse";
    let f = |s: f64| -> Result<f64> {
        let r = s.exp();
        if r == 0.0 {
            return Err(SpecFunError::computation(OP, format!("modulus underflows for y = {y}")));
        }
        Ok(mu(Modulus::new(r)?)? - y)
    };
    let mut hi = (2.0 * LN_2 - y).min(-0.5 * LN_2);
    let mut lo = LN_2 - y;
    let mut f_lo = f(lo)?;
    while f_lo < 0.0 {
        lo -= 1.0;
        f_lo = f(lo)?;
    }
    // μ(r) and log(4/r) agree to rounding for tiny r; step outward if needed,
    // never past 1/√2 where μ = π/2 ≤ y
    let cap = -0.5 * LN_2;
    let mut f_hi = f(hi)?;
    while f_hi > 0.0 && hi < cap {
        hi = (hi + 1e-3).min(cap);
        f_hi = f(hi)?;
    }
    if f_hi > 0.0 {
        return Err(SpecFunError::computation(OP, format!("bracket failed for y = {y}")));
    }
    while hi - lo > 1e-15 * lo.abs().max(1.0) {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid.exp());
        }
        if fm > 0.0 {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    let s = if f_lo != f_hi {
        lo + f_lo * (hi - lo) / (f_lo - f_hi)
    } else {
        0.5 * (lo + hi)
    };
    Ok(s.exp())
}

/// φ_K(r) = μ⁻¹(μ(r)/K); K < 1 gives the inverse family.
pub fn phi_k(k: f64, r: f64) -> Result<f64> {
    Ok(phi_k_modulus(k, Modulus::new(r)?)?.r)
}

/// φ_K on a modulus, keeping r′ exact when the image is close to 1.
pub fn phi_k_modulus(k: f64, m: Modulus) -> Result<Modulus> {
    const OP: &str = "phi_k";
    if !(k > 0.0 && k.is_finite()) {
        return Err(SpecFunError::domain(OP, format!("K = {k} must be positive")));
    }
    check_interior(OP, m)?;
    if k == 1.0 {
        return Ok(m);
    }
    mu_inverse(mu(m)? / k)
}

/// E K′ + E′ K − K K′ against π/2.
pub fn legendre_residual(m: Modulus) -> Result<Residual> {
    check_interior("legendre_residual", m)?;
    let (k, kp) = (ellint_k(m)?, ellint_kp(m)?);
    let (e, ep) = (ellint_e(m)?, ellint_ep(m)?);
    let terms = [e * kp, ep * k, -k * kp];
    Ok(Residual::new(
        terms.iter().sum(),
        FRAC_PI_2,
        terms.iter().map(|t| t.abs()).sum(),
    ))
}

/// E_a K_a′ + E_a′ K_a − K_a K_a′ against π sin(πa)/(4(1−a)).
pub fn gen_legendre_residual(a: f64, m: Modulus) -> Result<Residual> {
    check_a("gen_legendre_residual", a)?;
    check_interior("gen_legendre_residual", m)?;
    let c = m.complement();
    let (k, kp) = (gen_k(a, m)?, gen_k(a, c)?);
    let (e, ep) = (gen_e(a, m)?, gen_e(a, c)?);
    let terms = [e * kp, ep * k, -k * kp];
    Ok(Residual::new(
        terms.iter().sum(),
        PI * sin_pi(a) / (4.0 * (1.0 - a)),
        terms.iter().map(|t| t.abs()).sum(),
    ))
}

/// The Landen image 2√r/(1+r) and its complement (1−r)/(1+r).
fn landen_pair(r: f64) -> (f64, f64) {
    (2.0 * r.sqrt() / (1.0 + r), (1.0 - r) / (1.0 + r))
}

/// K(2√r/(1+r)) vs (1+r)K(r), and K((1−r)/(1+r)) vs ((1+r)/2)K′(r).
pub fn landen_residuals(r: f64) -> Result<(Residual, Residual)> {
    const OP: &str = "landen_residuals";
    let m = Modulus::new(r)?;
    check_interior(OP, m)?;
    let (l, lp) = landen_pair(r);
    let first = Residual::sides(k_from_complement(OP, lp)?, (1.0 + r) * ellint_k(m)?);
    let second = Residual::sides(k_from_complement(OP, l)?, 0.5 * (1.0 + r) * ellint_kp(m)?);
    Ok((first, second))
}

/// Slack in the two-sided Landen-type inequalities for zero-balanced F(a,b;a+b;·).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandenMargins {
    /// (1+r)F(r²) − F(ℓ²), ℓ = 2√r/(1+r).
    pub first_lower: f64,
    /// F(ℓ²) + (R − log 16)/B − (1+r)F(r²).
    pub first_upper: f64,
    /// F(ℓ′²) − ((1+r)/2)F(1−r²), ℓ′ = (1−r)/(1+r).
    pub second_lower: f64,
    /// ((1+r)/2)[F(1−r²) + (R − log 16)/B] − F(ℓ′²).
    pub second_upper: f64,
}

impl LandenMargins {
    pub fn as_array(&self) -> [f64; 4] {
        [
            self.first_lower,
            self.first_upper,
            self.second_lower,
            self.second_upper,
        ]
    }
}

pub fn landen_inequality_margins(a: f64, b: f64, c: f64, r: f64) -> Result<LandenMargins> {
    const OP: &str = "landen_inequality_margins";
    check_a(OP, a)?;
    check_a(OP, b)?;
    if (c - (a + b)).abs() > 1e-12 {
        return Err(SpecFunError::parameter(OP, format!("c = {c} differs from a + b = {}", a + b)));
    }
    let m = Modulus::new(r)?;
    check_interior(OP, m)?;
    let t = HypTriple::new(a, b, a + b)?;
    let (l, lp) = landen_pair(r);
    let f_r = hyp_sq(&t, m.r, m.r_prime)?;
    let f_rp = hyp_sq(&t, m.r_prime, m.r)?;
    let f_l = hyp_sq(&t, l, lp)?;
    let f_lp = hyp_sq(&t, lp, l)?;
    let shift = (zero_balanced_r(a, b)? - LN_16) / beta(a, b)?;
    let half = 0.5 * (1.0 + r);
    Ok(LandenMargins {
        first_lower: (1.0 + r) * f_r - f_l,
        first_upper: f_l + shift - (1.0 + r) * f_r,
        second_lower: f_lp - half * f_rp,
        second_upper: half * (f_rp + shift) - f_lp,
    })
}

/// Slack in six bounds for K(r); all positive on (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KBoundMargins {
    /// K − (π/2)(arth r / r)^{1/2}.
    pub arth_sqrt_lower: f64,
    /// (π/2)(arth r / r) − K.
    pub arth_upper: f64,
    /// K − (π/2)(arth r / r)^{3/4}.
    pub arth_three_quarter_lower: f64,
    /// K/log(4/r′) − 9/(8 + r²).
    pub kuhnau: f64,
    /// 1 + r′²/4 − K/log(4/r′).
    pub qiu_vamanamurthy: f64,
    /// K/log(4/r′) − 1 − (π/(4 log 2) − 1) r′².
    pub alzer: f64,
}

impl KBoundMargins {
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.arth_sqrt_lower,
            self.arth_upper,
            self.arth_three_quarter_lower,
            self.kuhnau,
            self.qiu_vamanamurthy,
            self.alzer,
        ]
    }
}

/// Margins as series in x = r², where both sides agree to leading orders.
struct NearZero {
    arth_sqrt_lower: PowerSeries,
    arth_upper: PowerSeries,
    arth_three_quarter_lower: PowerSeries,
    /// Numerator of the Alzer margin; divide by log(4/r′).
    alzer_numerator: PowerSeries,
    muir: PowerSeries,
    e_upper: PowerSeries,
}

fn half_pi() -> Dd {
    Dd::PI / 2.0
}

fn arth_power_margin(p: Dd) -> PowerSeries {
    PowerSeries::k_normalized()
        .sub(&PowerSeries::arth_over_r().pow(p))
        .cleaned()
        .scale(half_pi())
}

fn near_zero() -> &'static NearZero {
    static SERIES: OnceLock<NearZero> = OnceLock::new();
    SERIES.get_or_init(|| {
        let kn = PowerSeries::k_normalized();
        let en = PowerSeries::e_normalized();
        let arth = PowerSeries::arth_over_r();
        let alzer_c = Dd::PI / (Dd::LN_2 * 4.0);
        // c − (c−1)x
        let poly = PowerSeries::polynomial(&[alzer_c, Dd::ONE - alzer_c]);
        let muir_rhs = PowerSeries::constant(Dd::ONE)
            .add(&PowerSeries::binomial(1.0, 0.75))
            .scale(Dd::new(0.5))
            .pow(Dd::ratio(2.0, 3.0));
        NearZero {
            arth_sqrt_lower: arth_power_margin(Dd::new(0.5)),
            arth_upper: arth.sub(&kn).cleaned().scale(half_pi()),
            arth_three_quarter_lower: arth_power_margin(Dd::new(0.75)),
            alzer_numerator: kn
                .scale(half_pi())
                .sub(&PowerSeries::ln_4_over_rp().mul(&poly))
                .cleaned(),
            muir: en.sub(&muir_rhs).cleaned(),
            e_upper: PowerSeries::binomial(0.5, 0.5).sub(&en).cleaned(),
        }
    })
}

/// log(4/r′).
fn ln_4_over(m: Modulus) -> f64 {
    2.0 * LN_2 - m.r_prime.ln()
}

pub fn k_bound_margins(r: f64) -> Result<KBoundMargins> {
    let m = Modulus::new(r)?;
    check_interior("k_bound_margins", m)?;
    let k = ellint_k(m)?;
    let l = ln_4_over(m);
    let x = r * r;
    let rp2 = m.r_prime * m.r_prime;
    let ratio = k / l;
    let kuhnau = ratio - 9.0 / (8.0 + x);
    let qiu_vamanamurthy = 1.0 + 0.25 * rp2 - ratio;
    if r <= SERIES_CUTOVER {
        let s = near_zero();
        return Ok(KBoundMargins {
            arth_sqrt_lower: s.arth_sqrt_lower.eval_r(r),
            arth_upper: s.arth_upper.eval_r(r),
            arth_three_quarter_lower: s.arth_three_quarter_lower.eval_r(r),
            kuhnau,
            qiu_vamanamurthy,
            alzer: s.alzer_numerator.eval_r(r) / l,
        });
    }
    let arth = r.atanh() / r;
    let c = PI / (4.0 * LN_2);
    Ok(KBoundMargins {
        arth_sqrt_lower: k - FRAC_PI_2 * arth.sqrt(),
        arth_upper: FRAC_PI_2 * arth - k,
        arth_three_quarter_lower: k - FRAC_PI_2 * arth.powf(0.75),
        kuhnau,
        qiu_vamanamurthy,
        alzer: ratio - 1.0 - (c - 1.0) * rp2,
    })
}

/// K − (π/2)(arth r / r)^p for an arbitrary exponent; used to probe that
/// 3/4 cannot be increased.
pub fn k_lower_power_margin(r: f64, p: f64) -> Result<f64> {
    let m = Modulus::new(r)?;
    check_interior("k_lower_power_margin", m)?;
    if r <= SERIES_CUTOVER {
        return Ok(arth_power_margin(Dd::new(p)).eval_r(r));
    }
    Ok(ellint_k(m)? - FRAC_PI_2 * (r.atanh() / r).powf(p))
}

/// Slack in the lower (Muir) and upper power-mean bounds for (2/π)E(r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EBoundMargins {
    /// (2/π)E − ((1 + r′^{3/2})/2)^{2/3}.
    pub muir: f64,
    /// ((1 + r′²)/2)^{1/2} − (2/π)E.
    pub upper: f64,
}

pub fn e_bound_margins(r: f64) -> Result<EBoundMargins> {
    let m = Modulus::new(r)?;
    if r <= SERIES_CUTOVER {
        let s = near_zero();
        return Ok(EBoundMargins {
            muir: s.muir.eval_r(r),
            upper: s.e_upper.eval_r(r),
        });
    }
    let en = ellint_e(m)? / FRAC_PI_2;
    let rp = m.r_prime;
    Ok(EBoundMargins {
        muir: en - (0.5 * (1.0 + rp * rp.sqrt())).powf(2.0 / 3.0),
        upper: (0.5 * (1.0 + rp * rp)).sqrt() - en,
    })
}

/// Perimeter of the ellipse with semi-axes 1 and b: 4E(√(1−b²)).
pub fn ellipse_perimeter(b: f64) -> Result<f64> {
    if !(b > 0.0 && b <= 1.0) {
        return Err(SpecFunError::domain("ellipse_perimeter", format!("b = {b} outside (0, 1]")));
    }
    Ok(4.0 * ellint_e(Modulus::from_complement(b)?)?)
}

/// Residuals of the second-order equations satisfied by K_a and E_a in r.
pub fn elliptic_ode_residuals(a: f64, r: f64) -> Result<(Residual, Residual)> {
    const OP: &str = "elliptic_ode_residuals";
    check_a(OP, a)?;
    let m = Modulus::new(r)?;
    check_interior(OP, m)?;
    let rp2 = m.r_prime * m.r_prime;
    // f′ = 2rF′ and f″ = 2F′ + 4r²F″ with F differentiated in z = r²
    let residual = |t: HypTriple, first: f64, zeroth: f64| -> Result<Residual> {
        let f0 = FRAC_PI_2 * hyp_sq(&t, m.r, m.r_prime)?;
        let f1 = FRAC_PI_2 * hyp_sq_derivative(&t, m, 1)?;
        let f2 = FRAC_PI_2 * hyp_sq_derivative(&t, m, 2)?;
        let terms = [
            r * rp2 * (2.0 * f1 + 4.0 * r * r * f2),
            first * 2.0 * r * f1,
            zeroth * r * f0,
        ];
        Ok(Residual::new(
            terms.iter().sum(),
            0.0,
            terms.iter().map(|v| v.abs()).sum(),
        ))
    };
    // r r′² K_a″ + (1 − 3r²) K_a′ − 4a(1−a) r K_a = 0
    let k = residual(
        HypTriple::new(a, 1.0 - a, 1.0)?,
        1.0 - 3.0 * r * r,
        -4.0 * a * (1.0 - a),
    )?;
    // r r′² E_a″ + r′² E_a′ + 4(1−a)² r E_a = 0
    let e = residual(
        HypTriple::new(a - 1.0, 1.0 - a, 1.0)?,
        rp2,
        4.0 * (1.0 - a) * (1.0 - a),
    )?;
    Ok((k, e))
}

/// Numerical Schwarzian derivative of μ_a against its closed form
/// −8a(1−a)/r′² + (1 + 6r² − 3r⁴)/(2r² r′⁴).
///
/// Derivatives come from 5-point central stencils at steps h = 1e−3 and 2h,
/// combined by one Richardson step; the plain 5-point third derivative is
/// only second order, which is too coarse where μ_a bends sharply near r = 0.
pub fn schwarzian_mu_residual(a: f64, r: f64) -> Result<Residual> {
    const OP: &str = "schwarzian_mu_residual";
    const H: f64 = 1e-3;
    check_a(OP, a)?;
    if !(r - 4.0 * H > 0.0 && r + 4.0 * H < 1.0) {
        return Err(SpecFunError::domain(OP, format!("stencil around r = {r} leaves (0, 1)")));
    }
    let f = |x: f64| -> Result<f64> { mu_a(a, Modulus::new(x)?) };
    let f0 = f(r)?;
    let stencil = |h: f64| -> Result<[f64; 3]> {
        let (m2, m1, p1, p2) = (f(r - 2.0 * h)?, f(r - h)?, f(r + h)?, f(r + 2.0 * h)?);
        Ok([
            (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h),
            (-m2 + 16.0 * m1 - 30.0 * f0 + 16.0 * p1 - p2) / (12.0 * h * h),
            (-m2 + 2.0 * m1 - 2.0 * p1 + p2) / (2.0 * h * h * h),
        ])
    };
    let fine = stencil(H)?;
    let coarse = stencil(2.0 * H)?;
    let d1 = (16.0 * fine[0] - coarse[0]) / 15.0;
    let d2 = (16.0 * fine[1] - coarse[1]) / 15.0;
    let d3 = (4.0 * fine[2] - coarse[2]) / 3.0;
    let numeric = d3 / d1 - 1.5 * (d2 / d1).powi(2);
    Ok(Residual::sides(numeric, schwarzian_closed_form(a, r)))
}

/// Closed form of the Schwarzian of μ_a.
pub fn schwarzian_closed_form(a: f64, r: f64) -> f64 {
    let x = r * r;
    let rp2 = (1.0 - r) * (1.0 + r);
    -8.0 * a * (1.0 - a) / rp2 + (1.0 + 6.0 * x - 3.0 * x * x) / (2.0 * x * rp2 * rp2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn m(r: f64) -> Modulus {
        Modulus::new(r).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn k_endpoints_and_symmetry() {
        assert_eq!(ellint_k(m(0.0)).unwrap(), FRAC_PI_2);
        assert!(matches!(ellint_k(m(1.0)), Err(SpecFunError::Boundary { .. })));
        let s = m(FRAC_1_SQRT_2);
        assert!(close(ellint_k(s).unwrap(), ellint_kp(s).unwrap(), 1e-15));
    }

    #[test]
    fn k_known_values() {
        // K(0.5) = 1.685750354812596..., K(0.99) = 3.3566005233611923...
        assert!(close(ellint_k(m(0.5)).unwrap(), 1.685_750_354_812_596, 1e-15));
        assert!(close(ellint_k(m(0.99)).unwrap(), 3.356_600_523_361_192_3, 1e-14));
    }

    #[test]
    fn k_routes_agree() {
        for i in 1..50 {
            let mm = m(i as f64 / 50.0);
            let a = ellint_k(mm).unwrap();
            let b = ellint_k_series(mm).unwrap();
            assert!(close(a, b, 1e-13), "r={} {a} {b}", mm.r());
        }
    }

    #[test]
    fn e_values_and_seam() {
        assert_eq!(ellint_e(m(1.0)).unwrap(), 1.0);
        assert_eq!(ellint_e(m(0.0)).unwrap(), FRAC_PI_2);
        // E(0.5) = 1.4674622093394272
        assert!(close(ellint_e(m(0.5)).unwrap(), 1.467_462_209_339_427_2, 1e-15));
        let below = ellint_e(m(0.95 - 1e-12)).unwrap();
        let above = ellint_e(m(0.95 + 1e-12)).unwrap();
        assert!((below - above).abs() < 1e-10);
        // the complement route takes over at r = 1/√2
        let below = ellint_e(m(FRAC_1_SQRT_2 - 1e-12)).unwrap();
        let above = ellint_e(m(FRAC_1_SQRT_2 + 1e-12)).unwrap();
        assert!((below - above).abs() < 1e-10);
    }

    #[test]
    fn generalized_reduce_at_half() {
        let mm = m(0.3);
        assert!(close(gen_k(0.5, mm).unwrap(), ellint_k(mm).unwrap(), 1e-14));
        assert!(close(gen_e(0.5, mm).unwrap(), ellint_e(mm).unwrap(), 1e-14));
        assert_eq!(gen_k(0.3, m(0.0)).unwrap(), FRAC_PI_2);
        assert!(close(gen_e(0.25, m(1.0)).unwrap(), 2f64.sqrt() / 3.0, 1e-15));
        assert!(gen_k(1.0, mm).is_err());
    }

    #[test]
    fn quadrature_matches_series() {
        assert!(close(gen_k_quadrature(0.5, m(0.5)).unwrap(), ellint_k(m(0.5)).unwrap(), 1e-9));
        assert!(close(gen_k_quadrature(0.25, m(0.0)).unwrap(), FRAC_PI_2, 1e-9));
        let q = gen_k_quadrature(0.75, m(0.9)).unwrap();
        assert!(close(q, gen_k(0.75, m(0.9)).unwrap(), 1e-8));
    }

    #[test]
    fn mu_values() {
        assert!(close(mu(m(FRAC_1_SQRT_2)).unwrap(), FRAC_PI_2, 1e-15));
        assert!(close(mu_a(0.5, m(0.3)).unwrap(), mu(m(0.3)).unwrap(), 1e-14));
        let r = 1e-6;
        assert!((mu(m(r)).unwrap() - (4.0 / r).ln()).abs() < 1e-11);
        assert!(mu(m(0.0)).is_err());
    }

    #[test]
    fn mu_inverse_round_trip() {
        assert!(close(mu_inverse(FRAC_PI_2).unwrap().r(), FRAC_1_SQRT_2, 1e-14));
        for r in [0.01, 0.3, 0.5, 0.9, 0.99] {
            let y = mu(m(r)).unwrap();
            let back = mu_inverse(y).unwrap();
            assert!((mu(back).unwrap() - y).abs() < 1e-12);
            assert!((back.r() - r).abs() < 1e-12, "{r} {}", back.r());
        }
        let y = 30.0;
        assert!(close(mu_inverse(y).unwrap().r(), 4.0 * (-y).exp(), 1e-9));
        assert!(mu_inverse(0.0).is_err());
    }

    #[test]
    fn phi_compositions() {
        assert_eq!(phi_k(1.0, 0.5).unwrap(), 0.5);
        let back = phi_k(2.0, phi_k(0.5, 0.5).unwrap()).unwrap();
        assert!((back - 0.5).abs() < 1e-10);
        let want = mu_inverse(PI / 4.0).unwrap().r();
        assert!((phi_k(2.0, FRAC_1_SQRT_2).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn legendre_relations() {
        assert!(legendre_residual(m(0.5)).unwrap().abs() < 1e-14);
        for r in [1e-6, 0.01, 0.9, 1.0 - 1e-6] {
            assert!(legendre_residual(m(r)).unwrap().abs() < 1e-11, "r={r}");
        }
        let res = gen_legendre_residual(1.0 / 3.0, m(0.7)).unwrap();
        assert!(res.abs() < 1e-9);
        assert!(close(gen_legendre_residual(0.5, m(0.2)).unwrap().rhs, FRAC_PI_2, 1e-15));
    }

    #[test]
    fn landen() {
        for r in [0.25, 3.0 - 2.0 * 2f64.sqrt(), 1e-8, 0.98] {
            let (a, b) = landen_residuals(r).unwrap();
            assert!(a.relative() < 1e-11 && b.relative() < 1e-11, "r={r}");
        }
    }

    #[test]
    fn landen_inequalities() {
        let eq = landen_inequality_margins(0.5, 0.5, 1.0, 0.4).unwrap();
        assert!(eq.as_array().iter().all(|v| v.abs() < 1e-13), "{eq:?}");
        let g = landen_inequality_margins(0.3, 0.6, 0.9, 0.5).unwrap();
        assert!(g.as_array().iter().all(|v| *v >= 0.0), "{g:?}");
        assert!(landen_inequality_margins(0.3, 0.6, 1.0, 0.5).is_err());
    }

    #[test]
    fn k_bounds() {
        for r in [1e-6, 0.1, 0.5, 0.5 + 1e-9, 0.9, 0.999_999] {
            let b = k_bound_margins(r).unwrap();
            assert!(b.as_array().iter().all(|v| *v > 0.0), "r={r}: {b:?}");
        }
        // series and direct routes meet at the cutover
        let lo = k_bound_margins(0.5).unwrap().as_array();
        let hi = k_bound_margins(0.5 + 1e-12).unwrap().as_array();
        for (x, y) in lo.iter().zip(&hi) {
            assert!((x - y).abs() < 1e-12 + 1e-9 * x.abs());
        }
        assert!(k_lower_power_margin(0.05, 0.76).unwrap() < 0.0);
        assert!(k_lower_power_margin(0.05, 0.75).unwrap() > 0.0);
    }

    #[test]
    fn e_bounds() {
        let z = e_bound_margins(0.0).unwrap();
        assert_eq!((z.muir, z.upper), (0.0, 0.0));
        let one = e_bound_margins(1.0).unwrap();
        assert!((one.muir - (2.0 / PI - 0.5f64.powf(2.0 / 3.0))).abs() < 1e-15);
        for r in [1e-4, 0.3, 0.5, 0.8, 0.99] {
            let b = e_bound_margins(r).unwrap();
            assert!(b.muir >= 0.0 && b.upper >= 0.0, "r={r}: {b:?}");
        }
    }

    #[test]
    fn perimeter() {
        assert!(close(ellipse_perimeter(1.0).unwrap(), 2.0 * PI, 1e-15));
        assert!(close(ellipse_perimeter(1e-300).unwrap(), 4.0, 1e-15));
        assert!(close(ellipse_perimeter(0.6).unwrap(), 4.0 * ellint_e(m(0.8)).unwrap(), 1e-15));
        assert!(ellipse_perimeter(0.0).is_err());
    }

    #[test]
    fn ode_residuals() {
        for (a, r) in [(0.5, 0.5), (0.25, 0.3), (0.7, 0.95)] {
            let (k, e) = elliptic_ode_residuals(a, r).unwrap();
            assert!(k.relative() < 1e-12 && e.relative() < 1e-12, "{a} {r}: {k:?} {e:?}");
        }
    }

    #[test]
    fn schwarzian() {
        assert!((schwarzian_closed_form(0.5, 0.5) - (-2.0 / 0.75 + 2.3125 / 0.28125)).abs() < 1e-12);
        for (a, r) in [(0.5, 0.5), (0.5, FRAC_1_SQRT_2), (0.2, 0.05), (0.8, 0.95)] {
            let res = schwarzian_mu_residual(a, r).unwrap();
            assert!(res.relative() < 1e-4, "{a} {r}: {res:?}");
        }
        assert!(schwarzian_mu_residual(0.5, 0.001).is_err());
    }
}
