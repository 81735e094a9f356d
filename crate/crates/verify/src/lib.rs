//! Verification harness: sampling grids, margin-reporting suites for
//! special-function identities and inequalities, and generic shape checks.
//!
//! Every suite maps a grid point to a signed margin; negative margins beyond
//! the suite tolerance are violations. Points are evaluated in parallel and
//! folded in an order-independent way, so reports are reproducible.

pub mod checks;
mod error;
pub mod grid;
pub mod report;
pub mod samples;
pub mod suites;

pub use checks::{
    bk_ratio_probe, convex_check, derivative_sign_check, lhopital_rule_probe, monotone_check, Anchor,
    Curvature, Direction, Sign,
};
pub use error::VerifyError;
pub use grid::{GridSpec, Spacing};
pub use report::{PointFailure, Sample, SuiteReport, Violation};
pub use suites::{
    find, k_exponent_probe, registry, run_all, run_suite, run_suite_on_points, Suite, THETA_TABLE, THETA_TOLERANCE,
};
