//! Which suites a `verify` invocation runs. Each suite parallelizes over
//! its own points; suites themselves run in order.

use specfun_verify::{k_exponent_probe, registry, run_all, run_suite, GridSpec, SuiteReport};

use crate::error::{CliError, Result};
use crate::params::Params;

/// The lower-bound exponent probe, `K(r) > (π/2)(arth r / r)^p`, which is
/// not in the registry because it is expected to fail for p > 3/4.
pub const EXPONENT_PROBE: &str = "arth-exponent";

const PROBE_GRID: GridSpec = GridSpec::logit(0.0, 1.0, 1000);

pub fn run(ids: &[String], grid: Option<&GridSpec>, tolerance: Option<f64>, params: &Params) -> Result<Vec<SuiteReport>> {
    let uses_probe = ids.iter().any(|id| id == EXPONENT_PROBE);
    params.restrict("verify", if uses_probe { &["p"] } else { &[] })?;
    if uses_probe && tolerance.is_some() {
        return Err(CliError::usage(format!(
            "{EXPONENT_PROBE} is judged strictly; --tolerance does not apply"
        )));
    }
    if ids.len() == 1 && ids[0] == "all" && grid.is_none() {
        return Ok(run_all(tolerance)?);
    }
    let mut expanded: Vec<&str> = Vec::new();
    for id in ids {
        if id == "all" {
            expanded.extend(registry().iter().map(|s| s.id));
        } else {
            expanded.push(id);
        }
    }
    expanded
        .into_iter()
        .map(|id| {
            if id == EXPONENT_PROBE {
                let p = params
                    .real("p")?
                    .ok_or_else(|| CliError::usage(format!("{EXPONENT_PROBE} needs --param p=<exponent>")))?;
                Ok(k_exponent_probe(p, grid.unwrap_or(&PROBE_GRID))?)
            } else {
                Ok(run_suite(id, grid, tolerance)?)
            }
        })
        .collect()
}
