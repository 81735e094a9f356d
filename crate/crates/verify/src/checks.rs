//! Generic shape checks on sampled functions: monotonicity, convexity,
//! the monotone form of l'Hôpital's rule, power-series ratio monotonicity,
//! and derivative sign patterns.

use rayon::prelude::*;
use specfun_core::SpecFunError;

use crate::error::VerifyError;
use crate::grid::GridSpec;
use crate::report::{Fold, Judge, Sample, SuiteReport};

type Eval = Result<f64, SpecFunError>;

/// Slack for a first difference normalised by the larger endpoint value.
pub const MONOTONE_SLACK: f64 = 4.0 * f64::EPSILON;
/// Slack for a normalised second difference.
pub const CONVEX_SLACK: f64 = 16.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Convex,
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }
}

/// Which end of the interval anchors the difference quotients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Anchor {
    Left(f64),
    Right(f64),
}

impl Anchor {
    fn at(self) -> f64 {
        match self {
            Anchor::Left(a) | Anchor::Right(a) => a,
        }
    }
}

fn eval_all<F>(f: &F, xs: &[f64]) -> Vec<Eval>
where
    F: Fn(f64) -> Eval + Sync,
{
    xs.par_iter().map(|&x| f(x)).collect()
}

/// Folds margins attached to grid points, recording failed evaluations once each.
fn fold_sequence(
    xs: &[f64],
    values: &[Eval],
    margins: impl Iterator<Item = (f64, Sample)>,
    judge: Judge,
) -> Fold {
    let mut fold = Fold::default();
    for (x, v) in xs.iter().zip(values) {
        if let Err(e) = v {
            fold = fold.add(*x, Err(e.clone()));
        }
    }
    for (x, s) in margins {
        fold = fold.add(x, Ok((s, judge)));
    }
    fold
}

fn finish(fold: Fold, name: &str, judge: Judge, points: usize) -> SuiteReport {
    let mut r = fold.finish(name, judge.tolerance);
    r.points = points;
    r
}

/// Consecutive normalised differences `sign·(y₁ − y₀)/max(|y₀|, |y₁|)`,
/// attached to the right-hand point, over the successfully evaluated values.
fn difference_margins(xs: &[f64], values: &[Eval], dir: Direction) -> Vec<(f64, Sample)> {
    let ok: Vec<(f64, f64)> = xs
        .iter()
        .zip(values)
        .filter_map(|(&x, v)| v.as_ref().ok().map(|&y| (x, y)))
        .collect();
    ok.windows(2)
        .map(|w| {
            let (y0, y1) = (w[0].1, w[1].1);
            let scale = y0.abs().max(y1.abs()).max(f64::MIN_POSITIVE);
            (w[1].0, Sample::with_sides(dir.sign() * (y1 - y0) / scale, y1, y0))
        })
        .collect()
}

/// Flags any step against `dir` larger than rounding of the two values.
pub fn monotone_check<F>(f: F, grid: &GridSpec, dir: Direction) -> Result<SuiteReport, VerifyError>
where
    F: Fn(f64) -> Eval + Sync,
{
    let xs = grid.points()?;
    let values = eval_all(&f, &xs);
    let judge = Judge { tolerance: MONOTONE_SLACK, strict: false };
    let margins = difference_margins(&xs, &values, dir);
    let fold = fold_sequence(&xs, &values, margins.into_iter(), judge);
    Ok(finish(fold, "monotone", judge, xs.len()))
}

/// Second divided differences, normalised so that rounding of the three
/// values contributes O(ε); attached to the middle point.
pub fn convex_check<F>(f: F, grid: &GridSpec, curvature: Curvature) -> Result<SuiteReport, VerifyError>
where
    F: Fn(f64) -> Eval + Sync,
{
    let xs = grid.points()?;
    let values = eval_all(&f, &xs);
    let sign = match curvature {
        Curvature::Convex => 1.0,
        Curvature::Concave => -1.0,
    };
    let ok: Vec<(f64, f64)> = xs
        .iter()
        .zip(&values)
        .filter_map(|(&x, v)| v.as_ref().ok().map(|&y| (x, y)))
        .collect();
    let margins = ok.windows(3).map(|w| {
        let [(x0, y0), (x1, y1), (x2, y2)] = [w[0], w[1], w[2]];
        let (h0, h1) = (x1 - x0, x2 - x1);
        let d = (y2 - y1) / h1 - (y1 - y0) / h0;
        let scale = y0.abs().max(y1.abs()).max(y2.abs()).max(f64::MIN_POSITIVE);
        let norm = scale * (1.0 / h0 + 1.0 / h1);
        (x1, Sample::margin(sign * d / norm))
    });
    let judge = Judge { tolerance: CONVEX_SLACK, strict: false };
    let fold = fold_sequence(&xs, &values, margins, judge);
    Ok(finish(fold, "convex", judge, xs.len()))
}

fn step(x: f64) -> f64 {
    1e-4f64.max(1e-4 * x.abs())
}

/// Whether a sequence is monotone within a relative slack, and which way.
fn monotone_direction(ys: &[f64], slack: f64) -> Option<Direction> {
    let ok = |dir: Direction| {
        ys.windows(2).all(|w| {
            let scale = w[0].abs().max(w[1].abs()).max(f64::MIN_POSITIVE);
            dir.sign() * (w[1] - w[0]) >= -slack * scale
        })
    };
    if ok(Direction::Increasing) {
        Some(Direction::Increasing)
    } else if ok(Direction::Decreasing) {
        Some(Direction::Decreasing)
    } else {
        None
    }
}

/// Relative slack on the numerically differentiated ratio g′/h′.
const DERIVATIVE_RATIO_SLACK: f64 = 1e-8;
/// Relative slack on the anchored difference quotients.
const QUOTIENT_SLACK: f64 = 1e-9;

/// Checks the monotone form of l'Hôpital's rule on a concrete pair: when the
/// central-difference ratio g′/h′ is monotone on the grid, the anchored
/// quotient (g(x) − g(A))/(h(x) − h(A)) must be monotone the same way.
///
/// If g′/h′ is not monotone the premise fails and the report carries a note
/// and no margins. Points where h(x) = h(A) are skipped.
pub fn lhopital_rule_probe<G, H>(
    g: G,
    h: H,
    anchor: Anchor,
    grid: &GridSpec,
) -> Result<SuiteReport, VerifyError>
where
    G: Fn(f64) -> Eval + Sync,
    H: Fn(f64) -> Eval + Sync,
{
    const NAME: &str = "lhopital";
    let xs = grid.points()?;
    let ratio = |x: f64| -> Eval {
        let d = step(x);
        let dg = g(x + d)? - g(x - d)?;
        let dh = h(x + d)? - h(x - d)?;
        if dh == 0.0 {
            return Err(SpecFunError::Computation {
                op: "lhopital_rule_probe",
                detail: format!("h′ vanishes numerically at {x}"),
            });
        }
        Ok(dg / dh)
    };
    let rho = eval_all(&ratio, &xs);
    if let Some((x, e)) = xs.iter().zip(&rho).find_map(|(x, r)| r.as_ref().err().map(|e| (x, e))) {
        return Ok(SuiteReport::skipped(
            NAME,
            QUOTIENT_SLACK,
            format!("premise not checkable: g′/h′ failed at {x}: {e}"),
        ));
    }
    let rho: Vec<f64> = rho.into_iter().map(|r| r.unwrap_or(f64::NAN)).collect();
    let Some(dir) = monotone_direction(&rho, DERIVATIVE_RATIO_SLACK) else {
        return Ok(SuiteReport::skipped(
            NAME,
            QUOTIENT_SLACK,
            "premise not met: g′/h′ is not monotone on the grid".into(),
        ));
    };

    let a = anchor.at();
    let (ga, ha) = match (g(a), h(a)) {
        (Ok(ga), Ok(ha)) => (ga, ha),
        (Err(e), _) | (_, Err(e)) => {
            return Ok(SuiteReport::skipped(NAME, QUOTIENT_SLACK, format!("anchor {a}: {e}")))
        }
    };
    let quotient = |x: f64| -> Option<Eval> {
        let (gx, hx) = match (g(x), h(x)) {
            (Ok(gx), Ok(hx)) => (gx, hx),
            (Err(e), _) | (_, Err(e)) => return Some(Err(e)),
        };
        let dh = hx - ha;
        (dh != 0.0).then(|| Ok((gx - ga) / dh))
    };
    let q: Vec<Option<Eval>> = xs.par_iter().map(|&x| quotient(x)).collect();
    let skipped = q.iter().filter(|v| v.is_none()).count();
    let (qx, qv): (Vec<f64>, Vec<Eval>) = xs
        .iter()
        .zip(q)
        .filter_map(|(&x, v)| v.map(|v| (x, v)))
        .unzip();
    let judge = Judge { tolerance: QUOTIENT_SLACK, strict: false };
    let margins = difference_margins(&qx, &qv, dir);
    let fold = fold_sequence(&qx, &qv, margins.into_iter(), judge);
    let mut report = finish(fold, NAME, judge, xs.len());
    let word = match dir {
        Direction::Increasing => "increasing",
        Direction::Decreasing => "decreasing",
    };
    report.note = Some(if skipped > 0 {
        format!("g′/h′ {word}; {skipped} point(s) with h(x) = h(anchor) skipped")
    } else {
        format!("g′/h′ {word}")
    });
    Ok(report)
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Checks that R/S inherits the monotonicity of rₙ/sₙ on a grid in (0, 1),
/// with R(x) = Σ rₙxⁿ and S(x) = Σ sₙxⁿ (coefficient i multiplies xⁱ).
///
/// If some sₙ ≤ 0 or rₙ/sₙ is not monotone the probe is skipped and the
/// report says why; this is not a failure.
pub fn bk_ratio_probe(r: &[f64], s: &[f64], grid: &GridSpec) -> Result<SuiteReport, VerifyError> {
    const NAME: &str = "bk-ratio";
    const SLACK: f64 = 1e-12;
    if grid.lo < 0.0 || grid.hi > 1.0 {
        return Err(VerifyError::Grid(format!(
            "series-ratio probe needs a grid inside [0, 1], got [{}, {}]",
            grid.lo, grid.hi
        )));
    }
    if r.len() != s.len() || s.is_empty() {
        return Ok(SuiteReport::skipped(
            NAME,
            SLACK,
            format!("precondition failed: {} r-coefficients vs {} s-coefficients", r.len(), s.len()),
        ));
    }
    if let Some(i) = s.iter().position(|&v| !(v > 0.0)) {
        return Ok(SuiteReport::skipped(
            NAME,
            SLACK,
            format!("precondition failed: s[{i}] = {} is not positive", s[i]),
        ));
    }
    let ratios: Vec<f64> = r.iter().zip(s).map(|(a, b)| a / b).collect();
    let Some(dir) = monotone_direction(&ratios, 0.0) else {
        return Ok(SuiteReport::skipped(
            NAME,
            SLACK,
            "precondition failed: coefficient ratio is not monotone".into(),
        ));
    };
    let xs = grid.points()?;
    let values: Vec<Eval> = xs.iter().map(|&x| Ok(horner(r, x) / horner(s, x))).collect();
    let judge = Judge { tolerance: SLACK, strict: false };
    let margins = difference_margins(&xs, &values, dir);
    let fold = fold_sequence(&xs, &values, margins.into_iter(), judge);
    Ok(finish(fold, NAME, judge, xs.len()))
}

/// Central differences of orders 1–3 at step `h`.
fn central(f: &impl Fn(f64) -> Eval, x: f64, h: f64) -> Result<([f64; 3], f64), SpecFunError> {
    let f0 = f(x)?;
    let (p1, m1) = (f(x + h)?, f(x - h)?);
    let (p2, m2) = (f(x + 2.0 * h)?, f(x - 2.0 * h)?);
    let d1 = (p1 - m1) / (2.0 * h);
    let d2 = (p1 - 2.0 * f0 + m1) / (h * h);
    let d3 = (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h);
    let mag = [f0, p1, m1, p2, m2].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(([d1, d2, d3], mag))
}

/// Required ratio between a derivative estimate and its error estimate.
pub const SIGN_FACTOR: f64 = 10.0;

/// Checks the signs of f′, f″, … (up to third order) at every grid point.
///
/// Derivatives are central differences with h = max(1e−4, 1e−4·|x|); the
/// error estimate is the disagreement with step 2h (truncation is O(h²))
/// plus the rounding of the sampled values. The margin is
/// `sign·f⁽ᵏ⁾/(10·error) − 1`, so a nonnegative margin means the sign is
/// resolved by at least a factor of ten.
pub fn derivative_sign_check<F>(f: F, grid: &GridSpec, signs: &[Sign]) -> Result<SuiteReport, VerifyError>
where
    F: Fn(f64) -> Eval + Sync,
{
    if signs.is_empty() || signs.len() > 3 {
        return Err(VerifyError::Grid(format!(
            "derivative orders 1 to 3 are supported, got {}",
            signs.len()
        )));
    }
    let xs = grid.points()?;
    let judge = Judge { tolerance: 0.0, strict: false };
    let eval = |x: f64| -> Result<(Sample, Judge), SpecFunError> {
        let h = step(x);
        let (d_h, mag) = central(&f, x, h)?;
        let (d_2h, mag2) = central(&f, x, 2.0 * h)?;
        let mag = mag.max(mag2);
        let worst = signs
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let order = (k + 1) as i32;
                let rounding = 8.0 * f64::EPSILON * mag / h.powi(order);
                let err = (d_h[k] - d_2h[k]).abs() + rounding;
                Sample::margin(s.value() * d_h[k] / (SIGN_FACTOR * err) - 1.0)
            });
        Ok((Sample::worst(worst).expect("at least one order"), judge))
    };
    let fold = crate::report::fold_points(&xs, eval);
    Ok(fold.finish("derivative-signs", 0.0))
}
