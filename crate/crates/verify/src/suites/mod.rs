//! The suite registry: every identity and inequality as a margin function
//! over a default grid.

mod elliptic;
mod hypergeo;
mod means;
mod special;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use specfun_core::{Residual, SpecFunError};

use crate::error::VerifyError;
use crate::grid::GridSpec;
use crate::report::{fold_points, Judge, Sample, SuiteReport};

pub use elliptic::k_exponent_probe;
pub use special::{THETA_TABLE, THETA_TOLERANCE};

type EvalFn = fn(f64) -> Result<Sample, SpecFunError>;

/// Points where a suite's inequality holds with equality; margins there are
/// only required to be ≥ −tolerance.
#[derive(Debug, Clone, Copy)]
pub struct Equality {
    pub holds_at: fn(f64) -> bool,
    pub tolerance: f64,
    pub description: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Real,
    /// Grid points are rounded to the nearest integer and deduplicated.
    Integer,
}

#[derive(Debug, Clone, Copy)]
pub struct Suite {
    pub id: &'static str,
    pub description: &'static str,
    pub grid: GridSpec,
    pub tolerance: f64,
    /// Margins must be positive (not just ≥ 0) away from equality points.
    pub strict: bool,
    pub kind: PointKind,
    pub equality: Option<Equality>,
    eval: EvalFn,
}

impl Suite {
    pub fn evaluate(&self, x: f64) -> Result<Sample, SpecFunError> {
        (self.eval)(x)
    }

    fn judge(&self, x: f64, tolerance: f64) -> Judge {
        match self.equality {
            Some(eq) if (eq.holds_at)(x) => Judge {
                tolerance: eq.tolerance.max(tolerance),
                strict: false,
            },
            _ => Judge { tolerance, strict: self.strict },
        }
    }

    fn points(&self, grid: &GridSpec) -> Result<Vec<f64>, VerifyError> {
        let mut pts = grid.points()?;
        if self.kind == PointKind::Integer {
            for p in &mut pts {
                *p = p.round();
            }
            pts.dedup();
        }
        Ok(pts)
    }
}

/// Builder shorthand used by the suite tables.
pub(crate) const fn suite(
    id: &'static str,
    description: &'static str,
    grid: GridSpec,
    tolerance: f64,
    strict: bool,
    eval: EvalFn,
) -> Suite {
    Suite {
        id,
        description,
        grid,
        tolerance,
        strict,
        kind: PointKind::Real,
        equality: None,
        eval,
    }
}

impl Suite {
    pub(crate) const fn integer(mut self) -> Self {
        self.kind = PointKind::Integer;
        self
    }

    pub(crate) const fn equality(mut self, holds_at: fn(f64) -> bool, tolerance: f64, description: &'static str) -> Self {
        self.equality = Some(Equality { holds_at, tolerance, description });
        self
    }
}

/// All registered suites in a fixed order.
pub fn registry() -> &'static [Suite] {
    static REGISTRY: OnceLock<Vec<Suite>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = special::suites();
        all.extend(hypergeo::suites());
        all.extend(elliptic::suites());
        all.extend(means::suites());
        all
    })
}

/// Looks a suite up by id; `eq2.10(1,inf)` is accepted for `eq2.10(1,∞)`.
pub fn find(id: &str) -> Result<&'static Suite, VerifyError> {
    let canonical = match id {
        "eq2.10(1,inf)" => "eq2.10(1,∞)",
        other => other,
    };
    registry()
        .iter()
        .find(|s| s.id == canonical)
        .ok_or_else(|| VerifyError::UnknownSuite(id.to_string()))
}

fn check_tolerance(t: f64) -> Result<f64, VerifyError> {
    if t.is_finite() && t >= 0.0 {
        Ok(t)
    } else {
        Err(VerifyError::Tolerance(t))
    }
}

/// Runs a suite on its default grid or an override, with its default
/// tolerance or an override.
pub fn run_suite(id: &str, grid: Option<&GridSpec>, tolerance: Option<f64>) -> Result<SuiteReport, VerifyError> {
    let s = find(id)?;
    let pts = s.points(grid.unwrap_or(&s.grid))?;
    run_on(s, &pts, tolerance)
}

/// Runs a suite on explicit points; the report does not depend on their order.
pub fn run_suite_on_points(id: &str, points: &[f64], tolerance: Option<f64>) -> Result<SuiteReport, VerifyError> {
    run_on(find(id)?, points, tolerance)
}

fn run_on(s: &Suite, points: &[f64], tolerance: Option<f64>) -> Result<SuiteReport, VerifyError> {
    let tol = check_tolerance(tolerance.unwrap_or(s.tolerance))?;
    let start = Instant::now();
    let fold = fold_points(points, |x| s.evaluate(x).map(|sample| (sample, s.judge(x, tol))));
    let mut report = fold.finish(s.id, tol);
    report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

/// Every registered suite on its default grid, in registry order.
pub fn run_all(tolerance: Option<f64>) -> Result<Vec<SuiteReport>, VerifyError> {
    if let Some(t) = tolerance {
        check_tolerance(t)?;
    }
    registry()
        .par_iter()
        .map(|s| run_suite(s.id, None, tolerance))
        .collect()
}

// Margin helpers shared by the suite tables.

/// −|lhs − rhs|/scale.
pub(crate) fn relative(r: &Residual) -> Sample {
    Sample::with_sides(-r.relative(), r.lhs, r.rhs)
}

/// −|lhs − rhs|.
pub(crate) fn absolute(r: &Residual) -> Sample {
    Sample::with_sides(-r.abs(), r.lhs, r.rhs)
}

/// The worst sample over a parameter set; errors propagate.
pub(crate) fn worst_of<T, F>(params: &[T], f: F) -> Result<Sample, SpecFunError>
where
    F: Fn(&T) -> Result<Sample, SpecFunError>,
{
    let samples = params.iter().map(f).collect::<Result<Vec<_>, _>>()?;
    Ok(Sample::worst(samples).expect("parameter sets are nonempty"))
}

/// Grid point as a positive integer.
pub(crate) fn as_index(op: &'static str, x: f64, min: u64) -> Result<u64, SpecFunError> {
    let n = x.round();
    if !(n >= min as f64) || n > 1e15 {
        return Err(SpecFunError::Domain {
            op,
            detail: format!("point {x} is not an integer ≥ {min}"),
        });
    }
    Ok(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(ids.len(), 46);
        for s in registry() {
            s.grid.validate().unwrap();
        }
    }

    #[test]
    fn alias_and_unknown() {
        assert_eq!(find("eq2.10(1,inf)").unwrap().id, "eq2.10(1,∞)");
        assert!(matches!(find("nope"), Err(VerifyError::UnknownSuite(_))));
        assert!(run_suite("legendre", None, Some(-1.0)).is_err());
    }
}
