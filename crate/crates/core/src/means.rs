//! Classical two-argument means: arithmetic-geometric, power, logarithmic,
//! and t-modifications of an arbitrary mean.

use crate::error::{Result, SpecFunError};

const AGM_MAX_ITER: usize = 64;

/// A pair of strictly positive reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanPair {
    a: f64,
    b: f64,
}

impl MeanPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(SpecFunError::domain(
                "mean_pair",
                format!("({a}, {b}) must both be positive and finite"),
            ));
        }
        Ok(MeanPair { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        MeanPair { a: self.b, b: self.a }
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        MeanPair::new(lambda * self.a, lambda * self.b)
    }
}

/// Iterates of the arithmetic-geometric mean, starting from (max, min).
#[derive(Debug, Clone, PartialEq)]
pub struct AgmTrace {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub iterations: usize,
}

/// AGM(a, b) with the full iteration trace.
///
/// Stops once a_n − b_n is within a few ulps of a_n; quadratic convergence
/// gets there in at most six steps for ratios down to 1e−300.
pub fn agm(p: MeanPair) -> (f64, AgmTrace) {
    let (mut a, mut b) = if p.a >= p.b { (p.a, p.b) } else { (p.b, p.a) };
    let mut trace = AgmTrace {
        a: vec![a],
        b: vec![b],
        iterations: 0,
    };
    while trace.iterations < AGM_MAX_ITER && a - b > 2.0 * f64::EPSILON * a {
        let next_a = 0.5 * (a + b);
        // keep the geometric step bounded by the arithmetic one under rounding
        let next_b = (a * b).sqrt().min(next_a);
        a = next_a;
        b = next_b;
        trace.a.push(a);
        trace.b.push(b);
        trace.iterations += 1;
    }
    (0.5 * (a + b), trace)
}

pub fn agm_value(p: MeanPair) -> f64 {
    agm(p).0
}

pub fn arithmetic_mean(p: MeanPair) -> f64 {
    0.5 * (p.a + p.b)
}

pub fn geometric_mean(p: MeanPair) -> f64 {
    (p.a * p.b).sqrt()
}

/// A_t(a, b) = ((a^t + b^t)/2)^{1/t}; t = 0 is the geometric-mean limit.
pub fn power_mean(t: f64, p: MeanPair) -> Result<f64> {
    if !t.is_finite() {
        return Err(SpecFunError::parameter("power_mean", format!("t = {t}")));
    }
    if t == 0.0 {
        return Ok(geometric_mean(p));
    }
    // factor out the extreme that keeps the ratio ≤ 1 to avoid overflow
    let s = if t > 0.0 { p.a.max(p.b) } else { p.a.min(p.b) };
    let x = (p.a / s).powf(t);
    let y = (p.b / s).powf(t);
    Ok(s * (0.5 * (x + y)).powf(1.0 / t))
}

/// L(a, b) = (a − b)/(ln a − ln b), continuous at a = b.
pub fn log_mean(p: MeanPair) -> f64 {
    let (a, b) = (p.a, p.b);
    if a == b {
        return a;
    }
    // ln a − ln b = ln(1 + (a−b)/b), accurate when a ≈ b
    let d = (a - b) / b;
    let ln_ratio = if d.abs() < 0.5 { d.ln_1p() } else { (a / b).ln() };
    (a - b) / ln_ratio
}

/// What to do with t = 0 in a t-modification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroPolicy {
    Reject,
    /// Return √(ab), the limit for every mean considered here.
    Geometric,
}

/// M_t(a, b) = M(a^t, b^t)^{1/t}.
pub fn t_modification<M>(mean: M, t: f64, p: MeanPair, zero: ZeroPolicy) -> Result<f64>
where
    M: Fn(MeanPair) -> f64,
{
    const OP: &str = "t_modification";
    if !t.is_finite() {
        return Err(SpecFunError::parameter(OP, format!("t = {t}")));
    }
    if t == 0.0 {
        return match zero {
            ZeroPolicy::Geometric => Ok(geometric_mean(p)),
            ZeroPolicy::Reject => Err(SpecFunError::parameter(OP, "t = 0 without limit flag")),
        };
    }
    // homogeneity: work with (1, b/a) so the powers stay in range
    let s = p.a;
    let q = MeanPair::new(1.0, (p.b / s).powf(t))?;
    Ok(s * mean(q).powf(1.0 / t))
}

/// L_t(a, b), the t-modified logarithmic mean.
pub fn log_mean_t(t: f64, p: MeanPair) -> Result<f64> {
    t_modification(log_mean, t, p, ZeroPolicy::Geometric)
}

/// (L_{3/2}(1,x) − AGM(1,x), AGM(1,x) − L(1,x)); zeros at x = 1.
pub fn borwein_chain_margins(x: f64) -> Result<(f64, f64)> {
    let p = MeanPair::new(1.0, x)?;
    if x == 1.0 {
        return Ok((0.0, 0.0));
    }
    let m = agm_value(p);
    Ok((log_mean_t(1.5, p)? - m, m - log_mean(p)))
}

/// True when t ↦ L_t(1, x) is nondecreasing along `ts` (sorted ascending)
/// within a relative slack of 1e−12.
pub fn lt_monotone_check(x: f64, ts: &[f64]) -> Result<bool> {
    let p = MeanPair::new(1.0, x)?;
    let values = ts
        .iter()
        .map(|&t| log_mean_t(t, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(values
        .windows(2)
        .all(|w| w[1] >= w[0] - 1e-12 * w[0].abs().max(1.0)))
}
