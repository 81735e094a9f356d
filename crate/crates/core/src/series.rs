//! Truncated-series bookkeeping shared by the summation routines.

use std::sync::OnceLock;

/// Default cap on the number of series terms.
pub const DEFAULT_TERM_CAP: usize = 2_000_000;

/// Default relative stopping tolerance for hypergeometric series.
pub const DEFAULT_TOLERANCE: f64 = 1e-17;

static TERM_CAP_OVERRIDE: OnceLock<usize> = OnceLock::new();

/// Install a process-wide term cap used by [`SeriesConfig::default`].
///
/// Can be set once; later calls return the cap already installed as the error.
pub fn set_term_cap_override(cap: usize) -> Result<(), usize> {
    TERM_CAP_OVERRIDE.set(cap.max(1)).map_err(|_| *TERM_CAP_OVERRIDE.get().unwrap())
}

/// Value of a truncated series together with its convergence metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: f64,
    pub terms_used: usize,
    /// Absolute truncation-error estimate, never negative.
    pub est_error: f64,
    pub converged: bool,
}

impl SeriesEval {
    pub(crate) fn exact(value: f64, terms_used: usize) -> Self {
        SeriesEval {
            value,
            terms_used,
            est_error: 0.0,
            converged: true,
        }
    }

    /// Multiply value and error estimate by a constant factor.
    pub(crate) fn scaled(self, factor: f64) -> Self {
        SeriesEval {
            value: self.value * factor,
            est_error: self.est_error * factor.abs(),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Relative tolerance: stop once the tail estimate is below `tolerance * max(1, |sum|)`.
    pub tolerance: f64,
    pub term_cap: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            tolerance: DEFAULT_TOLERANCE,
            term_cap: TERM_CAP_OVERRIDE.get().copied().unwrap_or(DEFAULT_TERM_CAP),
        }
    }
}

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_keeps_small_terms() {
        let mut acc = Accumulator::default();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-17);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-16).abs() < 1e-30);
    }

    #[test]
    fn default_config_is_sane() {
        let cfg = SeriesConfig::default();
        assert!(cfg.term_cap >= 1);
        assert_eq!(cfg.tolerance, DEFAULT_TOLERANCE);
    }
}
