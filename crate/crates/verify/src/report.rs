//! Suite reports and the order-independent fold that builds them.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use specfun_core::SpecFunError;

/// Value of one check at one point: a signed margin (negative means the
/// inequality or identity is violated) and, where meaningful, both sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub margin: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
}

impl Sample {
    pub fn margin(margin: f64) -> Self {
        Sample { margin, lhs: None, rhs: None }
    }

    pub fn with_sides(margin: f64, lhs: f64, rhs: f64) -> Self {
        Sample { margin, lhs: Some(lhs), rhs: Some(rhs) }
    }

    /// The sample with the smallest margin; NaN margins win so they surface.
    pub fn worst(samples: impl IntoIterator<Item = Sample>) -> Option<Sample> {
        samples.into_iter().reduce(|a, b| {
            if b.margin.is_nan() || (!a.margin.is_nan() && b.margin < a.margin) {
                b
            } else {
                a
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub point: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointFailure {
    pub point: f64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Grid points attempted, including those that failed to evaluate.
    pub points: usize,
    pub min_margin: f64,
    pub worst_point: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_lhs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_rhs: Option<f64>,
    pub tolerance: f64,
    pub violations: Vec<Violation>,
    #[serde(default)]
    pub failures: Vec<PointFailure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl SuiteReport {
    /// No violations. Point-level failures are reported separately.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.failures.is_empty()
    }

    /// The report with timing removed, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub(crate) fn skipped(suite: &str, tolerance: f64, note: String) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            points: 0,
            min_margin: f64::INFINITY,
            worst_point: f64::NAN,
            worst_lhs: None,
            worst_rhs: None,
            tolerance,
            violations: Vec::new(),
            failures: Vec::new(),
            note: Some(note),
            elapsed_ms: None,
        }
    }
}

/// How a margin is judged at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Judge {
    pub tolerance: f64,
    /// With zero tolerance, a strict check also rejects a margin of exactly 0.
    pub strict: bool,
}

impl Judge {
    pub fn violates(&self, margin: f64) -> bool {
        margin < -self.tolerance || (self.strict && self.tolerance == 0.0 && margin <= 0.0)
    }
}

#[derive(Debug, Clone, Copy)]
struct Worst {
    point: f64,
    sample: Sample,
}

fn key_cmp(a: &Worst, b: &Worst) -> Ordering {
    a.sample
        .margin
        .total_cmp(&b.sample.margin)
        .then(a.point.total_cmp(&b.point))
}

/// Partial aggregate over a set of points; `merge` is associative and
/// commutative, so the final report does not depend on evaluation order.
#[derive(Debug, Default, Clone)]
pub(crate) struct Fold {
    points: usize,
    worst: Option<Worst>,
    violations: Vec<Violation>,
    failures: Vec<PointFailure>,
}

impl Fold {
    pub fn add(mut self, point: f64, outcome: Result<(Sample, Judge), SpecFunError>) -> Self {
        self.points += 1;
        match outcome {
            Ok((s, _)) if s.margin.is_nan() => self.failures.push(PointFailure {
                point,
                error: "margin is NaN".into(),
            }),
            Ok((s, judge)) => {
                if judge.violates(s.margin) {
                    self.violations.push(Violation { point, margin: s.margin });
                }
                let cand = Worst { point, sample: s };
                self.worst = Some(match self.worst {
                    Some(w) if key_cmp(&w, &cand) != Ordering::Greater => w,
                    _ => cand,
                });
            }
            Err(e) => self.failures.push(PointFailure {
                point,
                error: e.to_string(),
            }),
        }
        self
    }

    pub fn merge(mut self, other: Fold) -> Self {
        self.points += other.points;
        self.worst = match (self.worst, other.worst) {
            (Some(a), Some(b)) => Some(if key_cmp(&a, &b) != Ordering::Greater { a } else { b }),
            (a, b) => a.or(b),
        };
        self.violations.extend(other.violations);
        self.failures.extend(other.failures);
        self
    }

    pub fn finish(mut self, suite: &str, tolerance: f64) -> SuiteReport {
        self.violations.sort_by(|a, b| {
            a.point.total_cmp(&b.point).then(a.margin.total_cmp(&b.margin))
        });
        self.failures.sort_by(|a, b| {
            a.point.total_cmp(&b.point).then_with(|| a.error.cmp(&b.error))
        });
        let (min_margin, worst_point, lhs, rhs) = match self.worst {
            Some(w) => (w.sample.margin, w.point, w.sample.lhs, w.sample.rhs),
            None => (f64::INFINITY, f64::NAN, None, None),
        };
        SuiteReport {
            suite: suite.to_string(),
            points: self.points,
            min_margin,
            worst_point,
            worst_lhs: lhs,
            worst_rhs: rhs,
            tolerance,
            violations: self.violations,
            failures: self.failures,
            note: None,
            elapsed_ms: None,
        }
    }
}

/// Evaluates `eval` at every point in parallel and folds the outcomes.
pub(crate) fn fold_points<F>(points: &[f64], eval: F) -> Fold
where
    F: Fn(f64) -> Result<(Sample, Judge), SpecFunError> + Sync,
{
    points
        .par_iter()
        .fold(Fold::default, |acc, &x| acc.add(x, eval(x)))
        .reduce(Fold::default, Fold::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOOSE: Judge = Judge { tolerance: 0.0, strict: false };

    fn fold_of(pairs: &[(f64, f64)]) -> Fold {
        pairs
            .iter()
            .fold(Fold::default(), |f, &(x, m)| f.add(x, Ok((Sample::margin(m), LOOSE))))
    }

    #[test]
    fn merge_is_order_independent() {
        let pts = [(0.1, 3.0), (0.2, -1.0), (0.3, -1.0), (0.4, 2.0)];
        let a = fold_of(&pts).finish("s", 0.0);
        let mut rev = pts;
        rev.reverse();
        let b = fold_of(&rev[..2]).merge(fold_of(&rev[2..])).finish("s", 0.0);
        assert_eq!(a, b);
        assert_eq!(a.min_margin, -1.0);
        assert_eq!(a.worst_point, 0.2);
        assert_eq!(a.violations.len(), 2);
    }

    #[test]
    fn strict_rejects_zero() {
        let strict = Judge { tolerance: 0.0, strict: true };
        assert!(strict.violates(0.0));
        assert!(!LOOSE.violates(0.0));
        let tol = Judge { tolerance: 1e-9, strict: true };
        assert!(!tol.violates(-1e-10));
    }

    #[test]
    fn errors_become_failures() {
        let f = Fold::default().add(
            0.5,
            Err(SpecFunError::Pole { op: "gamma", at: 0.0 }),
        );
        let r = f.finish("s", 0.0);
        assert_eq!(r.points, 1);
        assert_eq!(r.failures.len(), 1);
        assert!(r.passed() && !r.clean());
    }
}
