//! Sampling grids for verification suites.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::VerifyError;

/// Logit grids never get closer than this to 0 or 1.
pub const LOGIT_CLAMP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
    /// Uniform in ln(x/(1−x)); resolves both ends of (0, 1).
    Logit,
}

impl FromStr for Spacing {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            "logit" => Ok(Spacing::Logit),
            other => Err(VerifyError::Grid(format!("unknown spacing '{other}'"))),
        }
    }
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
            Spacing::Logit => "logit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, n: usize, spacing: Spacing) -> Result<Self, VerifyError> {
        let g = GridSpec { lo, hi, n, spacing };
        g.validate()?;
        Ok(g)
    }

    pub const fn linear(lo: f64, hi: f64, n: usize) -> Self {
        GridSpec { lo, hi, n, spacing: Spacing::Linear }
    }

    pub const fn log(lo: f64, hi: f64, n: usize) -> Self {
        GridSpec { lo, hi, n, spacing: Spacing::Log }
    }

    pub const fn logit(lo: f64, hi: f64, n: usize) -> Self {
        GridSpec { lo, hi, n, spacing: Spacing::Logit }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::Grid(msg));
        if !(self.lo.is_finite() && self.hi.is_finite()) || !(self.lo < self.hi) {
            return bad(format!("need finite lo < hi, got [{}, {}]", self.lo, self.hi));
        }
        if self.n < 2 {
            return bad(format!("need at least 2 points, got {}", self.n));
        }
        match self.spacing {
            Spacing::Log if self.lo <= 0.0 => bad(format!("log spacing needs lo > 0, got {}", self.lo)),
            Spacing::Logit if self.lo < 0.0 || self.hi > 1.0 => {
                bad(format!("logit spacing needs [lo, hi] ⊂ [0, 1], got [{}, {}]", self.lo, self.hi))
            }
            _ => Ok(()),
        }
    }

    /// The grid points in increasing order.
    pub fn points(&self) -> Result<Vec<f64>, VerifyError> {
        self.validate()?;
        let n = self.n;
        let lerp = |lo: f64, hi: f64, i: usize| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * (i as f64 / (n - 1) as f64)
            }
        };
        let pts = match self.spacing {
            Spacing::Linear => (0..n).map(|i| lerp(self.lo, self.hi, i)).collect(),
            Spacing::Log => {
                let (a, b) = (self.lo.ln(), self.hi.ln());
                (0..n)
                    .map(|i| match i {
                        0 => self.lo,
                        _ if i == n - 1 => self.hi,
                        _ => lerp(a, b, i).exp(),
                    })
                    .collect()
            }
            Spacing::Logit => {
                let lo = self.lo.clamp(LOGIT_CLAMP, 1.0 - LOGIT_CLAMP);
                let hi = self.hi.clamp(LOGIT_CLAMP, 1.0 - LOGIT_CLAMP);
                if !(lo < hi) {
                    return Err(VerifyError::Grid(format!(
                        "logit interval [{}, {}] collapses after clamping",
                        self.lo, self.hi
                    )));
                }
                let logit = |p: f64| (p / (1.0 - p)).ln();
                let (a, b) = (logit(lo), logit(hi));
                (0..n)
                    .map(|i| match i {
                        0 => lo,
                        _ if i == n - 1 => hi,
                        _ => 1.0 / (1.0 + (-lerp(a, b, i)).exp()),
                    })
                    .collect()
            }
        };
        Ok(pts)
    }
}

/// `lo,hi,n,spacing`, e.g. `0,1,1000,logit`.
impl FromStr for GridSpec {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(VerifyError::Grid(format!("expected lo,hi,n,spacing, got '{s}'")));
        }
        let num = |p: &str| {
            p.parse::<f64>()
                .map_err(|_| VerifyError::Grid(format!("'{p}' is not a number")))
        };
        let n = parts[2]
            .parse::<usize>()
            .map_err(|_| VerifyError::Grid(format!("'{}' is not a point count", parts[2])))?;
        GridSpec::new(num(parts[0])?, num(parts[1])?, n, parts[3].parse()?)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.lo, self.hi, self.n, self.spacing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_endpoints_exact() {
        let p = GridSpec::linear(1.0, 2.0, 5).points().unwrap();
        assert_eq!(p, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    }

    #[test]
    fn log_is_geometric() {
        let p = GridSpec::log(1e-3, 1e3, 7).points().unwrap();
        for w in p.windows(2) {
            assert!((w[1] / w[0] - 10.0).abs() < 1e-12);
        }
    }

    #[test]
    fn logit_clamps_and_is_symmetric() {
        let p = GridSpec::logit(0.0, 1.0, 101).points().unwrap();
        assert_eq!(p[0], LOGIT_CLAMP);
        assert_eq!(p[100], 1.0 - LOGIT_CLAMP);
        assert!((p[50] - 0.5).abs() < 1e-10);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validation() {
        assert!(GridSpec::new(1.0, 1.0, 10, Spacing::Linear).is_err());
        assert!(GridSpec::new(0.0, 1.0, 1, Spacing::Linear).is_err());
        assert!(GridSpec::new(0.0, 2.0, 10, Spacing::Logit).is_err());
        assert!(GridSpec::new(0.0, 2.0, 10, Spacing::Log).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let g: GridSpec = "0,1,10000,logit".parse().unwrap();
        assert_eq!(g, GridSpec::logit(0.0, 1.0, 10000));
        assert_eq!(g.to_string().parse::<GridSpec>().unwrap(), g);
        assert!("0,1,10".parse::<GridSpec>().is_err());
        assert!("0,1,x,log".parse::<GridSpec>().is_err());
    }
}
