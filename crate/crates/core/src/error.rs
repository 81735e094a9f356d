//! Error type shared by every kernel operation.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, SpecFunError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    /// Argument outside the domain of the function.
    #[error("{op}: domain error: {detail}")]
    Domain { op: &'static str, detail: String },

    /// Argument sits on a pole (e.g. Γ at a nonpositive integer).
    #[error("{op}: pole at {at}")]
    Pole { op: &'static str, at: f64 },

    /// Argument at an endpoint where the value is infinite or degenerate
    /// (e.g. K at r = 1, μ at r = 0).
    #[error("{op}: boundary at {at}")]
    Boundary { op: &'static str, at: f64 },

    /// Parameter combination is not admissible.
    #[error("{op}: parameter error: {detail}")]
    Parameter { op: &'static str, detail: String },

    /// The requested asymptotic or closed-form regime does not apply.
    #[error("{op}: regime error: {detail}")]
    Regime { op: &'static str, detail: String },

    /// A series did not reach its tolerance within the term cap.
    #[error("{op}: no convergence after {terms} terms (estimated error {est_error:e})")]
    Convergence {
        op: &'static str,
        terms: usize,
        value: f64,
        est_error: f64,
    },

    /// Invalid configuration, e.g. a coefficient index out of range.
    #[error("{op}: configuration error: {detail}")]
    Config { op: &'static str, detail: String },

    /// Intermediate quantities left the representable range.
    #[error("{op}: computation error: {detail}")]
    Computation { op: &'static str, detail: String },

    /// Quadrature failed to converge.
    #[error("{op}: quadrature did not converge (levels {levels}, last estimate {estimate}, error {est_error:e})")]
    Quadrature {
        op: &'static str,
        levels: usize,
        estimate: f64,
        est_error: f64,
    },
}

impl SpecFunError {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Self::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn parameter(op: &'static str, detail: impl Into<String>) -> Self {
        Self::Parameter {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn regime(op: &'static str, detail: impl Into<String>) -> Self {
        Self::Regime {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn config(op: &'static str, detail: impl Into<String>) -> Self {
        Self::Config {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn computation(op: &'static str, detail: impl Into<String>) -> Self {
        Self::Computation {
            op,
            detail: detail.into(),
        }
    }

    /// True for argument-domain style failures (domain, pole, boundary, parameter, regime).
    pub fn is_domain_like(&self) -> bool {
        matches!(
            self,
            Self::Domain { .. }
                | Self::Pole { .. }
                | Self::Boundary { .. }
                | Self::Parameter { .. }
                | Self::Regime { .. }
        )
    }
}
