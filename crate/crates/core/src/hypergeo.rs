//! Gauss hypergeometric function on real arguments, its near-1 regimes,
//! derivatives and the identities built from contiguous functions.

use crate::consts::EULER_GAMMA;
use crate::error::{Result, SpecFunError};
use crate::residual::Residual;
use crate::series::{Accumulator, SeriesConfig, SeriesEval};
use crate::special::{
    beta, digamma, digamma_any, gamma_ratio, is_nonpositive_integer, ln_abs_gamma,
};

/// Relative tolerance used to decide that c − a − b is an integer.
const INTEGER_BALANCE_TOL: f64 = 1e-13;
/// Above this z the integer-balance connection series is used.
const LOG_CONNECTION_Z: f64 = 0.95;
/// Above this z the non-integer connection formula is used.
const CONNECTION_Z: f64 = 0.9;
/// Non-integer balances closer than this to an integer are summed directly.
const CONNECTION_MIN_GAP: f64 = 1e-3;

/// How c compares with a + b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Balance {
    /// c > a + b: finite at z = 1.
    Positive,
    /// c = a + b: logarithmic singularity at z = 1.
    Zero,
    /// c < a + b: algebraic singularity at z = 1.
    Negative,
}

/// Parameter triple (a, b; c) of F(a, b; c; z); c is never 0, −1, −2, ….
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypTriple {
    a: f64,
    b: f64,
    c: f64,
}

impl HypTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(SpecFunError::parameter(
                "HypTriple",
                format!("non-finite parameters ({a}, {b}; {c})"),
            ));
        }
        if is_nonpositive_integer(c) {
            return Err(SpecFunError::parameter(
                "HypTriple",
                format!("c = {c} is a nonpositive integer"),
            ));
        }
        Ok(HypTriple { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// c − a − b.
    pub fn excess(&self) -> f64 {
        self.c - self.a - self.b
    }

    fn scale(&self) -> f64 {
        1.0f64.max(self.a.abs() + self.b.abs() + self.c.abs())
    }

    pub fn balance(&self) -> Balance {
        let s = self.excess();
        if s.abs() <= INTEGER_BALANCE_TOL * self.scale() {
            Balance::Zero
        } else if s > 0.0 {
            Balance::Positive
        } else {
            Balance::Negative
        }
    }

    /// The triple with a and b swapped.
    pub fn swapped(&self) -> Self {
        HypTriple {
            a: self.b,
            b: self.a,
            c: self.c,
        }
    }

    /// (a + k, b + k; c + k), used by the differentiation formula.
    fn shifted(&self, k: f64) -> Result<Self> {
        HypTriple::new(self.a + k, self.b + k, self.c + k)
    }

    /// Degree of the polynomial when a or b is a nonpositive integer.
    fn terminating_degree(&self) -> Option<u64> {
        let deg = |x: f64| is_nonpositive_integer(x).then(|| (-x) as u64);
        match (deg(self.a), deg(self.b)) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        }
    }
}

fn combine(parts: &[(f64, SeriesEval)]) -> SeriesEval {
    let mut acc = Accumulator::default();
    let mut err = 0.0;
    let mut terms = 0;
    let mut converged = true;
    for (factor, ev) in parts {
        acc.add(factor * ev.value);
        err += (factor * ev.est_error).abs();
        terms += ev.terms_used;
        converged &= ev.converged;
    }
    SeriesEval {
        value: acc.value(),
        terms_used: terms,
        est_error: err,
        converged,
    }
}

/// Direct summation of Σ (a)_n (b)_n / ((c)_n n!) zⁿ.
///
/// Stops when the geometric tail bound drops below
/// `tolerance · max(1, |sum|)`; polynomial cases are summed exactly.
pub fn gauss_2f1_series(t: &HypTriple, z: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    const OP: &str = "gauss_2f1_series";
    if !z.is_finite() {
        return Err(SpecFunError::domain(OP, format!("z = {z}")));
    }
    let (a, b, c) = (t.a, t.b, t.c);
    if let Some(deg) = t.terminating_degree() {
        let mut acc = Accumulator::default();
        let mut term = 1.0;
        acc.add(term);
        for n in 0..deg {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            acc.add(term);
        }
        return Ok(SeriesEval::exact(acc.value(), deg as usize + 1));
    }
    if z.abs() >= 1.0 {
        return Err(SpecFunError::domain(OP, format!("|z| = {} ≥ 1", z.abs())));
    }
    let past_zeros = a.abs().max(b.abs()).max(c.abs());
    let mut acc = Accumulator::default();
    let mut term = 1.0;
    acc.add(term);
    let mut n = 0usize;
    loop {
        if n + 1 >= cfg.term_cap {
            let sum = acc.value();
            return Err(SpecFunError::Convergence {
                op: OP,
                terms: n + 1,
                value: sum,
                est_error: term.abs() / (1.0 - z.abs()),
            });
        }
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        acc.add(term);
        n += 1;
        if nf + 1.0 > past_zeros {
            let nn = n as f64;
            let next = ((a + nn) * (b + nn) / ((c + nn) * (nn + 1.0)) * z).abs();
            let q = next.max(z.abs());
            if q < 1.0 {
                let tail = term.abs() * q / (1.0 - q);
                let sum = acc.value();
                if tail <= cfg.tolerance * sum.abs().max(1.0) {
                    return Ok(SeriesEval {
                        value: sum,
                        terms_used: n + 1,
                        est_error: tail,
                        converged: true,
                    });
                }
            }
        }
    }
}

/// F(a, b; a+b+m; 1−w) for a nonnegative integer m by the logarithmic
/// connection series in w.
fn log_connection(t: &HypTriple, m: u32, w: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    const OP: &str = "gauss_2f1";
    let (a, b) = (t.a, t.b);
    let mf = m as f64;
    let c = a + b + mf;
    let ln_w = w.ln();

    // Finite part: Γ(m)Γ(c)/(Γ(a+m)Γ(b+m)) Σ_{n<m} (a)_n(b)_n/(n!(1−m)_n) wⁿ
    let mut finite = 0.0;
    if m > 0 {
        let pref = gamma_ratio(&[mf, c], &[a + mf, b + mf])?;
        let mut term = 1.0;
        let mut acc = Accumulator::default();
        for n in 0..m {
            acc.add(term);
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
        }
        finite = pref * acc.value();
    }

    // Log part: −(−w)^m Γ(c)/(Γ(a)Γ(b)) Σ (a+m)_n(b+m)_n/(n!(n+m)!) wⁿ
    //           · [ln w − ψ(n+1) − ψ(n+m+1) + ψ(a+n+m) + ψ(b+n+m)]
    let pref = gamma_ratio(&[c], &[a, b])?;
    let sign = if m.is_multiple_of(2) { -1.0 } else { 1.0 };
    let pref = sign * pref * w.powi(m as i32);
    let mut coef = (-ln_abs_gamma(mf + 1.0)?).exp();
    let mut psi_n1 = -EULER_GAMMA;
    let mut psi_nm1 = digamma(mf + 1.0)?;
    let mut psi_a = digamma_any(a + mf)?;
    let mut psi_b = digamma_any(b + mf)?;
    let past_zeros = (a + mf).abs().max((b + mf).abs());
    let mut acc = Accumulator::default();
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let term = coef * (ln_w - psi_n1 - psi_nm1 + psi_a + psi_b);
        acc.add(term);
        if nf > past_zeros && w < 0.5 {
            let tail = 2.0 * term.abs() * w / (1.0 - w);
            let sum = acc.value();
            if tail <= cfg.tolerance * sum.abs().max(1.0) || term == 0.0 {
                let log_part = SeriesEval {
                    value: sum,
                    terms_used: n + 1,
                    est_error: tail,
                    converged: true,
                };
                let mut out = log_part.scaled(pref);
                out.value += finite;
                out.terms_used += m as usize;
                return Ok(out);
            }
        }
        if n + 1 >= cfg.term_cap {
            return Err(SpecFunError::Convergence {
                op: OP,
                terms: n + 1,
                value: finite + pref * acc.value(),
                est_error: (pref * term).abs(),
            });
        }
        coef *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + mf + 1.0);
        psi_a += 1.0 / (a + mf + nf);
        psi_b += 1.0 / (b + mf + nf);
        n += 1;
    }
}

/// F(a,b;c;1−w) for non-integer s = c−a−b via the two-term connection in w.
fn connection(t: &HypTriple, w: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    let (a, b, c) = (t.a, t.b, t.c);
    let s = t.excess();
    let g1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let g2 = gamma_ratio(&[c, -s], &[a, b])?;
    let mut parts = Vec::with_capacity(2);
    if g1 != 0.0 {
        let f1 = gauss_2f1_series(&HypTriple::new(a, b, 1.0 - s)?, w, cfg)?;
        parts.push((g1, f1));
    }
    if g2 != 0.0 {
        let f2 = gauss_2f1_series(&HypTriple::new(c - a, c - b, 1.0 + s)?, w, cfg)?;
        parts.push((g2 * w.powf(s), f2));
    }
    Ok(combine(&parts))
}

/// Route an evaluation at z with w = 1 − z supplied separately.
fn eval(t: &HypTriple, z: f64, w: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    // F is symmetric in (a, b); a fixed order makes the routing symmetric too
    if t.a > t.b {
        route(&HypTriple { a: t.b, b: t.a, c: t.c }, z, w, cfg)
    } else {
        route(t, z, w, cfg)
    }
}

fn route(t: &HypTriple, z: f64, w: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    const OP: &str = "gauss_2f1";
    if z == 0.0 {
        return Ok(SeriesEval::exact(1.0, 1));
    }
    if t.terminating_degree().is_some() {
        return gauss_2f1_series(t, z, cfg);
    }
    if !(z < 1.0 && w > 0.0) || z <= -1.0 {
        return Err(SpecFunError::domain(OP, format!("z = {z} outside (−1, 1)")));
    }
    let (a, b, c) = (t.a, t.b, t.c);
    if z < -0.5 {
        // Pfaff: F(a,b;c;z) = (1−z)^{−a} F(a, c−b; c; z/(z−1)).
        let inner = HypTriple::new(a, c - b, c)?;
        let ev = eval(&inner, -z / w, 1.0 / w, cfg)?;
        return Ok(ev.scaled(w.powf(-a)));
    }
    if z <= 0.0 {
        return gauss_2f1_series(t, z, cfg);
    }
    let s = t.excess();
    let m = s.round();
    let near_int = (s - m).abs() <= INTEGER_BALANCE_TOL * t.scale();
    if z > LOG_CONNECTION_Z && near_int && m >= 0.0 {
        return log_connection(t, m as u32, w, cfg);
    }
    if s < 0.0 && z > 0.5 {
        // F(a,b;c;z) = (1−z)^{c−a−b} F(c−a, c−b; c; z).
        let inner = HypTriple::new(c - a, c - b, c)?;
        let ev = eval(&inner, z, w, cfg)?;
        return Ok(ev.scaled(w.powf(s)));
    }
    if z > CONNECTION_Z && !near_int && (s - m).abs() >= CONNECTION_MIN_GAP {
        return connection(t, w, cfg);
    }
    gauss_2f1_series(t, z, cfg)
}

/// F(a, b; c; z) for real z ∈ (−1, 1).
pub fn gauss_2f1(t: &HypTriple, z: f64) -> Result<SeriesEval> {
    gauss_2f1_with(t, z, &SeriesConfig::default())
}

pub fn gauss_2f1_with(t: &HypTriple, z: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    if z.is_nan() {
        return Err(SpecFunError::domain("gauss_2f1", "z is NaN"));
    }
    eval(t, z, 1.0 - z, cfg)
}

/// F(a, b; c; 1 − w), taking the distance w to the singular point exactly.
pub fn gauss_2f1_at_complement(t: &HypTriple, w: f64) -> Result<SeriesEval> {
    if !(w > 0.0 && w < 2.0) {
        return Err(SpecFunError::domain(
            "gauss_2f1",
            format!("complement w = {w} outside (0, 2)"),
        ));
    }
    eval(t, 1.0 - w, w, &SeriesConfig::default())
}

fn value_at(t: &HypTriple, z: f64, w: f64) -> Result<f64> {
    Ok(eval(t, z, w, &SeriesConfig::default())?.value)
}

/// F(a, b; c; 1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) for c > a + b.
pub fn gauss_value_at_1(t: &HypTriple) -> Result<f64> {
    let s = t.excess();
    if t.balance() != Balance::Positive {
        return Err(SpecFunError::regime(
            "gauss_value_at_1",
            format!("c − a − b = {s} is not positive"),
        ));
    }
    gamma_ratio(&[t.c, s], &[t.c - t.a, t.c - t.b])
}

/// R(a, b) = −2γ − Ψ(a) − Ψ(b).
pub fn zero_balanced_r(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(SpecFunError::domain(
            "zero_balanced_r",
            format!("arguments ({a}, {b}) must be > 0"),
        ));
    }
    Ok(-2.0 * EULER_GAMMA - digamma(a)? - digamma(b)?)
}

/// Leading-order value with the size of the neglected remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValue {
    pub value: f64,
    /// (1−z)|log(1−z)|; the remainder is O(error_scale) with unspecified constant.
    pub error_scale: f64,
}

/// (R(a,b) − log(1−z)) / B(a,b), the leading behaviour of F(a,b;a+b;z) as z → 1.
pub fn zero_balanced_near_one(a: f64, b: f64, z: f64) -> Result<AsymptoticValue> {
    if !(z > 0.9 && z < 1.0) {
        return Err(SpecFunError::regime(
            "zero_balanced_near_one",
            format!("z = {z} outside (0.9, 1)"),
        ));
    }
    let w = 1.0 - z;
    let ln_w = w.ln();
    Ok(AsymptoticValue {
        value: (zero_balanced_r(a, b)? - ln_w) / beta(a, b)?,
        error_scale: w * ln_w.abs(),
    })
}

fn derivative_parts(t: &HypTriple, order: u32) -> Result<(f64, HypTriple)> {
    let (a, b, c) = (t.a, t.b, t.c);
    match order {
        0 => Ok((1.0, *t)),
        1 => Ok((a * b / c, t.shifted(1.0)?)),
        2 => Ok((
            a * b / c * ((a + 1.0) * (b + 1.0) / (c + 1.0)),
            t.shifted(2.0)?,
        )),
        _ => Err(SpecFunError::parameter(
            "gauss_2f1_derivative",
            format!("order {order} not in {{0, 1, 2}}"),
        )),
    }
}

/// dᵏ/dzᵏ F(a,b;c;z) for k = 1, 2 by the differentiation formula.
pub fn gauss_2f1_derivative(t: &HypTriple, z: f64, order: u32) -> Result<f64> {
    gauss_2f1_derivative_at(t, z, 1.0 - z, order)
}

/// dᵏ/dzᵏ F at z = 1 − w, with w given exactly.
pub fn gauss_2f1_derivative_at_complement(t: &HypTriple, w: f64, order: u32) -> Result<f64> {
    gauss_2f1_derivative_at(t, 1.0 - w, w, order)
}

fn gauss_2f1_derivative_at(t: &HypTriple, z: f64, w: f64, order: u32) -> Result<f64> {
    let (coef, shifted) = derivative_parts(t, order)?;
    if coef == 0.0 {
        return Ok(0.0);
    }
    Ok(coef * value_at(&shifted, z, w)?)
}

/// Values of F(a−1,b;c;·) and F(a,b;c;·) at z and 1 − z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContiguousQuad {
    pub u: f64,
    pub v: f64,
    pub u1: f64,
    pub v1: f64,
}

impl ContiguousQuad {
    pub fn new(t: &HypTriple, z: f64) -> Result<Self> {
        let lower = HypTriple::new(t.a - 1.0, t.b, t.c)?;
        let w = 1.0 - z;
        Ok(ContiguousQuad {
            u: value_at(&lower, z, w)?,
            v: value_at(t, z, w)?,
            u1: value_at(&lower, w, z)?,
            v1: value_at(t, w, z)?,
        })
    }
}

fn check_interior(op: &'static str, z: f64) -> Result<()> {
    if z > 0.0 && z < 1.0 {
        Ok(())
    } else {
        Err(SpecFunError::domain(op, format!("z = {z} outside (0, 1)")))
    }
}

/// Which contiguous identity a residual belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContiguousIdentity {
    /// z u′ = (a−1)(v − u)
    LowerParameter,
    /// z(1−z) v′ = (c−a)u + (a−c+bz)v
    Derivative,
    /// (ab/c) z(1−z) F(a+1,b+1;c+1;z) = (c−a)u + (a−c+bz)v
    ShiftedFunction,
    /// z(1−z) d/dz(uv₁ + u₁v − vv₁) = (1−a−b)[(1−z)uv₁ − zu₁v − (1−2z)vv₁]
    ProductDerivative,
    /// z(1−z) F′ = (c−b)F(a,b−1;c;z) + (b−c+az)F
    SymmetricDerivative,
}

impl ContiguousIdentity {
    pub const ALL: [ContiguousIdentity; 5] = [
        ContiguousIdentity::LowerParameter,
        ContiguousIdentity::Derivative,
        ContiguousIdentity::ShiftedFunction,
        ContiguousIdentity::ProductDerivative,
        ContiguousIdentity::SymmetricDerivative,
    ];
}

/// The five contiguous-function identities at (t, z), in [`ContiguousIdentity::ALL`] order.
///
/// All derivatives are analytic, via d/dz F(a,b;c;z) = (ab/c)F(a+1,b+1;c+1;z).
pub fn contiguous_residuals(t: &HypTriple, z: f64) -> Result<[Residual; 5]> {
    check_interior("contiguous_residuals", z)?;
    let (a, b, c) = (t.a, t.b, t.c);
    let w = 1.0 - z;
    let q = ContiguousQuad::new(t, z)?;
    let lower = HypTriple::new(a - 1.0, b, c)?;

    let du = gauss_2f1_derivative_at(&lower, z, w, 1)?;
    let du1 = gauss_2f1_derivative_at(&lower, w, z, 1)?;
    let dv = gauss_2f1_derivative_at(t, z, w, 1)?;
    let dv1 = gauss_2f1_derivative_at(t, w, z, 1)?;

    let r36 = {
        let rhs = (a - 1.0) * (q.v - q.u);
        let scale = (z * du).abs() + ((a - 1.0) * q.v).abs() + ((a - 1.0) * q.u).abs();
        Residual::new(z * du, rhs, scale)
    };
    let rhs37 = (c - a) * q.u + (a - c + b * z) * q.v;
    let scale37 = ((c - a) * q.u).abs() + ((a - c + b * z) * q.v).abs();
    let r37 = {
        let lhs = z * w * dv;
        Residual::new(lhs, rhs37, lhs.abs() + scale37)
    };
    let r38 = {
        let f = value_at(&t.shifted(1.0)?, z, w)?;
        let lhs = a * b / c * z * w * f;
        Residual::new(lhs, rhs37, lhs.abs() + scale37)
    };
    let r39 = {
        // d/dz[u(z)v(1−z)] = u′(z)v₁ − u v′(1−z), etc.
        let d_uv1 = du * q.v1 - q.u * dv1;
        let d_u1v = -du1 * q.v + q.u1 * dv;
        let d_vv1 = dv * q.v1 - q.v * dv1;
        let lhs = z * w * (d_uv1 + d_u1v - d_vv1);
        let k = 1.0 - a - b;
        let p1 = w * q.u * q.v1;
        let p2 = z * q.u1 * q.v;
        let p3 = (1.0 - 2.0 * z) * q.v * q.v1;
        let rhs = k * (p1 - p2 - p3);
        let scale = z * w * (d_uv1.abs() + d_u1v.abs() + d_vv1.abs())
            + k.abs() * (p1.abs() + p2.abs() + p3.abs());
        Residual::new(lhs, rhs, scale)
    };
    let r310 = {
        let lower_b = value_at(&HypTriple::new(a, b - 1.0, c)?, z, w)?;
        let lhs = z * w * dv;
        let t1 = (c - b) * lower_b;
        let t2 = (b - c + a * z) * q.v;
        Residual::new(lhs, t1 + t2, lhs.abs() + t1.abs() + t2.abs())
    };
    Ok([r36, r37, r38, r39, r310])
}

/// uv₁ + u₁v − vv₁ against Γ(c)²/(Γ(c+a−1)Γ(c−a+1)) for b = 1 − a.
pub fn corollary_313(a: f64, c: f64, z: f64) -> Result<Residual> {
    const OP: &str = "corollary_313";
    if !(a > 0.0 && a < 1.0) {
        return Err(SpecFunError::parameter(OP, format!("a = {a} outside (0, 1)")));
    }
    let b = 1.0 - a;
    if !(c > b) {
        return Err(SpecFunError::parameter(OP, format!("need c > 1 − a, got c = {c}")));
    }
    check_interior(OP, z)?;
    let q = ContiguousQuad::new(&HypTriple::new(a, b, c)?, z)?;
    let terms = [q.u * q.v1, q.u1 * q.v, q.v * q.v1];
    let lhs = terms[0] + terms[1] - terms[2];
    let rhs = gamma_ratio(&[c, c], &[c + a - 1.0, c - a + 1.0])?;
    Ok(Residual::new(
        lhs,
        rhs,
        terms.iter().map(|x| x.abs()).sum::<f64>().max(rhs.abs()),
    ))
}

fn check_positive_pair(op: &'static str, a: f64, b: f64) -> Result<()> {
    if a > 0.0 && b > 0.0 {
        Ok(())
    } else {
        Err(SpecFunError::parameter(op, format!("need a, b > 0, got ({a}, {b})")))
    }
}

/// k(x) = F(a, b; a+b; 1 − e^{−x}).
pub fn theorem31_k(a: f64, b: f64, x: f64) -> Result<f64> {
    check_positive_pair("theorem31_k", a, b)?;
    if !(x > 0.0) {
        return Err(SpecFunError::domain("theorem31_k", format!("x = {x} must be > 0")));
    }
    let w = (-x).exp();
    value_at(&HypTriple::new(a, b, a + b)?, -(-x).exp_m1(), w)
}

/// k′(x) = (ab/(a+b)) F(a+1, b+1; a+b+1; 1 − e^{−x}) e^{−x}.
pub fn theorem31_k_slope(a: f64, b: f64, x: f64) -> Result<f64> {
    check_positive_pair("theorem31_k", a, b)?;
    if !(x > 0.0) {
        return Err(SpecFunError::domain("theorem31_k", format!("x = {x} must be > 0")));
    }
    let w = (-x).exp();
    let t = HypTriple::new(a, b, a + b)?;
    Ok(gauss_2f1_derivative_at(&t, -(-x).exp_m1(), w, 1)? * w)
}

fn ell_setup(a: f64, b: f64, c: f64, x: f64) -> Result<(HypTriple, f64, f64, f64)> {
    const OP: &str = "theorem32_ell";
    check_positive_pair(OP, a, b)?;
    if !(c > 0.0) {
        return Err(SpecFunError::parameter(OP, format!("c = {c} must be > 0")));
    }
    let d = a + b - c;
    if !(d > 0.0) {
        return Err(SpecFunError::parameter(OP, format!("d = a + b − c = {d} must be > 0")));
    }
    if !(x > 0.0) {
        return Err(SpecFunError::domain(OP, format!("x = {x} must be > 0")));
    }
    // w = (1+x)^{−1/d}, z = 1 − w computed without cancellation.
    let ln_w = -x.ln_1p() / d;
    Ok((HypTriple::new(a, b, c)?, -ln_w.exp_m1(), ln_w.exp(), d))
}

/// ℓ(x) = F(a, b; c; 1 − (1+x)^{−1/d}) with d = a + b − c > 0.
pub fn theorem32_ell(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let (t, z, w, _) = ell_setup(a, b, c, x)?;
    value_at(&t, z, w)
}

/// ℓ′(x) = F′(z) · (1+x)^{−1/d−1}/d.
pub fn theorem32_ell_slope(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let (t, z, w, d) = ell_setup(a, b, c, x)?;
    Ok(gauss_2f1_derivative_at(&t, z, w, 1)? * w / (d * (1.0 + x)))
}

/// Differential equations satisfied by hypergeometric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeKind {
    /// z(1−z)w″ + [c − (a+b+1)z]w′ − abw = 0
    Hypergeometric,
    /// z(1−z²)w″ + [2c−1 − (2a+2b+1)z²]w′ − 4abzw = 0
    Quadratic,
    /// The equation for w = F(a,b;c;√(1−z²)).
    SqrtComplement,
}

/// Which solution of the equation is substituted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeSolution {
    /// F(·; z), F(·; z²) or F(·; √(1−z²)).
    Primary,
    /// F(·; 1−z) or F(·; 1−z²); requires 2c = a + b + 1.
    Complementary,
}

fn require_symmetric_c(op: &'static str, t: &HypTriple) -> Result<()> {
    let gap = 2.0 * t.c - t.a - t.b - 1.0;
    if gap.abs() > 1e-12 * t.scale() {
        return Err(SpecFunError::parameter(
            op,
            format!("requires 2c = a + b + 1 (off by {gap})"),
        ));
    }
    Ok(())
}

/// Residual of the chosen equation with the chosen solution substituted,
/// using analytic derivatives.
pub fn ode_residual(kind: OdeKind, solution: OdeSolution, t: &HypTriple, z: f64) -> Result<Residual> {
    const OP: &str = "ode_residual";
    check_interior(OP, z)?;
    let (a, b, c) = (t.a, t.b, t.c);
    if solution == OdeSolution::Complementary {
        if kind == OdeKind::SqrtComplement {
            return Err(SpecFunError::parameter(
                OP,
                "the √(1−z²) equation has only the primary solution here",
            ));
        }
        require_symmetric_c(OP, t)?;
    }
    // F and its first two derivatives at the point ζ = x, with 1 − ζ = y.
    let at = |x: f64, y: f64| -> Result<[f64; 3]> {
        Ok([
            value_at(t, x, y)?,
            gauss_2f1_derivative_at(t, x, y, 1)?,
            gauss_2f1_derivative_at(t, x, y, 2)?,
        ])
    };
    let terms: [f64; 3] = match kind {
        OdeKind::Hypergeometric => {
            let (w, w1, w2) = match solution {
                OdeSolution::Primary => {
                    let f = at(z, 1.0 - z)?;
                    (f[0], f[1], f[2])
                }
                OdeSolution::Complementary => {
                    let f = at(1.0 - z, z)?;
                    (f[0], -f[1], f[2])
                }
            };
            [
                z * (1.0 - z) * w2,
                (c - (a + b + 1.0) * z) * w1,
                -a * b * w,
            ]
        }
        OdeKind::Quadratic => {
            let z2 = z * z;
            let zc = (1.0 - z) * (1.0 + z);
            let (w, w1, w2) = match solution {
                OdeSolution::Primary => {
                    let f = at(z2, zc)?;
                    (f[0], 2.0 * z * f[1], 2.0 * f[1] + 4.0 * z2 * f[2])
                }
                OdeSolution::Complementary => {
                    let f = at(zc, z2)?;
                    (f[0], -2.0 * z * f[1], -2.0 * f[1] + 4.0 * z2 * f[2])
                }
            };
            [
                z * zc * w2,
                (2.0 * c - 1.0 - (2.0 * a + 2.0 * b + 1.0) * z2) * w1,
                -4.0 * a * b * z * w,
            ]
        }
        OdeKind::SqrtComplement => {
            let z2 = z * z;
            let big_z = ((1.0 - z) * (1.0 + z)).sqrt();
            let one_minus = z2 / (1.0 + big_z);
            let f = at(big_z, one_minus)?;
            // dZ/dz = −z/Z, d²Z/dz² = −1/Z³
            let dz = -z / big_z;
            let d2z = -1.0 / (big_z * big_z * big_z);
            let w = f[0];
            let w1 = f[1] * dz;
            let w2 = f[2] * dz * dz + f[1] * d2z;
            let zz3 = big_z * big_z * big_z;
            [
                zz3 * one_minus * z * w2,
                -(big_z * one_minus + (c - (a + b + 1.0) * big_z) * big_z * z2) * w1,
                -a * b * z2 * z * w,
            ]
        }
    };
    let lhs = terms.iter().sum::<f64>();
    let scale = terms.iter().map(|x| x.abs()).sum::<f64>();
    Ok(Residual::new(lhs, 0.0, scale))
}

/// [(c−a)(uv₁ + u₁v) + (a−1)vv₁]·z^{c−1}(1−z)^{c−1} against Γ(c)²/(Γ(a)Γ(b)).
pub fn wronskian_identity(t: &HypTriple, z: f64) -> Result<Residual> {
    const OP: &str = "wronskian_identity";
    let (a, b, c) = (t.a, t.b, t.c);
    check_positive_pair(OP, a, b)?;
    if !(c >= 1.0) {
        return Err(SpecFunError::parameter(OP, format!("c = {c} must be ≥ 1")));
    }
    require_symmetric_c(OP, t)?;
    check_interior(OP, z)?;
    let q = ContiguousQuad::new(t, z)?;
    let w = 1.0 - z;
    let weight = (z * w).powf(c - 1.0);
    let p1 = (c - a) * (q.u * q.v1 + q.u1 * q.v);
    let p2 = (a - 1.0) * q.v * q.v1;
    let lhs = (p1 + p2) * weight;
    let rhs = gamma_ratio(&[c, c], &[a, b])?;
    Ok(Residual::new(
        lhs,
        rhs,
        ((p1.abs() + p2.abs()) * weight).max(rhs.abs()),
    ))
}

/// F₁F₂ + F₃F₄ − F₂F₃ against Γ(a+b+1)Γ(b+c+1)/(Γ(a+b+c+3/2)Γ(b+1/2)).
pub fn elliott_identity(a: f64, b: f64, c: f64, x: f64) -> Result<Residual> {
    const OP: &str = "elliott_identity";
    if !(a >= 0.0 && b >= 0.0 && c >= 0.0) {
        return Err(SpecFunError::parameter(
            OP,
            format!("need a, b, c ≥ 0, got ({a}, {b}, {c})"),
        ));
    }
    check_interior(OP, x)?;
    let y = 1.0 - x;
    let f1 = value_at(&HypTriple::new(0.5 + a, -0.5 - c, 1.0 + a + b)?, x, y)?;
    let f2 = value_at(&HypTriple::new(0.5 - a, 0.5 + c, 1.0 + b + c)?, y, x)?;
    let f3 = value_at(&HypTriple::new(0.5 + a, 0.5 - c, 1.0 + a + b)?, x, y)?;
    let f4 = value_at(&HypTriple::new(-0.5 - a, 0.5 + c, 1.0 + b + c)?, y, x)?;
    let terms = [f1 * f2, f3 * f4, f2 * f3];
    let lhs = terms[0] + terms[1] - terms[2];
    let rhs = gamma_ratio(&[a + b + 1.0, b + c + 1.0], &[a + b + c + 1.5, b + 0.5])?;
    Ok(Residual::new(
        lhs,
        rhs,
        terms.iter().map(|t| t.abs()).sum::<f64>().max(rhs.abs()),
    ))
}

/// Kummer's product formula:
/// F(a,b;a+b−c+1;1−x)F(a+1,b+1;c+1;x) + c/(a+b−c+1) F(a,b;c;x)F(a+1,b+1;a+b−c+2;1−x)
/// = D x^{−c}(1−x)^{c−a−b−1},  D = Γ(a+b−c+1)Γ(c+1)/(Γ(a+1)Γ(b+1)).
pub fn kummer_form30(a: f64, b: f64, c: f64, x: f64) -> Result<Residual> {
    const OP: &str = "kummer_form30";
    check_interior(OP, x)?;
    let e = a + b - c + 1.0;
    for (name, p) in [("c + 1", c + 1.0), ("a + b − c + 1", e), ("a + b − c + 2", e + 1.0)] {
        if is_nonpositive_integer(p) {
            return Err(SpecFunError::parameter(
                OP,
                format!("{name} = {p} is a nonpositive integer"),
            ));
        }
    }
    let y = 1.0 - x;
    let first = value_at(&HypTriple::new(a, b, e)?, y, x)?
        * value_at(&HypTriple::new(a + 1.0, b + 1.0, c + 1.0)?, x, y)?;
    let second = if c == 0.0 {
        0.0
    } else {
        c / e
            * value_at(&HypTriple::new(a, b, c)?, x, y)?
            * value_at(&HypTriple::new(a + 1.0, b + 1.0, e + 1.0)?, y, x)?
    };
    let d = gamma_ratio(&[e, c + 1.0], &[a + 1.0, b + 1.0])?;
    let rhs = d * x.powf(-c) * y.powf(c - a - b - 1.0);
    Ok(Residual::new(
        first + second,
        rhs,
        (first.abs() + second.abs()).max(rhs.abs()),
    ))
}

/// Generalized hypergeometric series Σ Π(aᵢ)_n / Π(bⱼ)_n zⁿ/n!.
///
/// Terminates when an upper parameter is a nonpositive integer; otherwise
/// requires |z| < 1 (or convergence at z = ±1 within the term cap).
pub fn pfq_series(upper: &[f64], lower: &[f64], z: f64, cfg: &SeriesConfig) -> Result<SeriesEval> {
    const OP: &str = "pfq_series";
    let degree = upper
        .iter()
        .filter(|&&p| is_nonpositive_integer(p))
        .map(|&p| (-p) as usize)
        .min();
    let check_lower = |n: usize| -> Result<()> {
        for &q in lower {
            if q + n as f64 == 0.0 {
                return Err(SpecFunError::parameter(
                    OP,
                    format!("lower parameter {q} reaches zero at term {n}"),
                ));
            }
        }
        Ok(())
    };
    let mut acc = Accumulator::default();
    let mut term = 1.0;
    acc.add(term);
    let mut n = 0usize;
    let past_zeros = upper.iter().chain(lower).fold(0.0f64, |m, p| m.max(p.abs()));
    loop {
        if let Some(deg) = degree {
            if n == deg {
                return Ok(SeriesEval::exact(acc.value(), n + 1));
            }
        }
        if n + 1 >= cfg.term_cap {
            return Err(SpecFunError::Convergence {
                op: OP,
                terms: n + 1,
                value: acc.value(),
                est_error: term.abs(),
            });
        }
        check_lower(n)?;
        let nf = n as f64;
        let num: f64 = upper.iter().map(|p| p + nf).product();
        let den: f64 = lower.iter().map(|q| q + nf).product();
        term *= num / den * z / (nf + 1.0);
        acc.add(term);
        n += 1;
        if degree.is_none() && nf > past_zeros && z.abs() < 1.0 {
            let tail = term.abs() * z.abs() / (1.0 - z.abs());
            if tail <= cfg.tolerance * acc.value().abs().max(1.0) {
                return Ok(SeriesEval {
                    value: acc.value(),
                    terms_used: n + 1,
                    est_error: tail,
                    converged: true,
                });
            }
        }
    }
}

/// ₃F₂(−n, a, b; 1+a+b, 1+ε−n; 1), a terminating sum of n + 1 terms.
pub fn pfq_terminating_3f2(n: u32, a: f64, b: f64, eps: f64) -> Result<f64> {
    if n < 1 {
        return Err(SpecFunError::domain("pfq_terminating_3f2", "n must be ≥ 1"));
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(SpecFunError::domain(
            "pfq_terminating_3f2",
            format!("need a, b > 0, got ({a}, {b})"),
        ));
    }
    let nf = n as f64;
    Ok(pfq_series(
        &[-nf, a, b],
        &[1.0 + a + b, 1.0 + eps - nf],
        1.0,
        &SeriesConfig::default(),
    )?
    .value)
}
