//! Mean-value inequalities.

use specfun_core::means::{borwein_chain_margins, log_mean_t, MeanPair, agm_value};
use specfun_core::SpecFunError;

use super::{suite, Suite};
use crate::grid::GridSpec;
use crate::report::Sample;

/// t-values for the L_t monotonicity suite: 0.1, 0.2, …, 4.0.
fn t_grid() -> impl Iterator<Item = f64> {
    (1..=40).map(|i| i as f64 / 10.0)
}

fn near_one(x: f64) -> bool {
    (x - 1.0).abs() <= 1e-12
}

fn borwein(x: f64) -> Result<Sample, SpecFunError> {
    let (m1, m2) = borwein_chain_margins(x)?;
    let scale = agm_value(MeanPair::new(1.0, x)?);
    Ok(Sample::margin(m1.min(m2) / scale))
}

fn lt_monotone(x: f64) -> Result<Sample, SpecFunError> {
    let p = MeanPair::new(1.0, x)?;
    let values = t_grid().map(|t| log_mean_t(t, p)).collect::<Result<Vec<_>, _>>()?;
    let worst = values
        .windows(2)
        .map(|w| Sample::with_sides((w[1] - w[0]) / w[0], w[1], w[0]));
    Ok(Sample::worst(worst).expect("t-grid has several points"))
}

pub(super) fn suites() -> Vec<Suite> {
    vec![
        suite(
            "borwein",
            "L_{3/2}(1,x) > AGM(1,x) > L(1,x), margins relative to AGM(1,x)",
            GridSpec::log(0.01, 100.0, 201),
            0.0,
            true,
            borwein,
        )
        .equality(near_one, 1e-15, "x = 1, all three means equal 1"),
        suite(
            "lt-monotone",
            "t ↦ L_t(1,x) increasing over t = 0.1, …, 4.0 (relative steps)",
            GridSpec::log(0.01, 100.0, 101),
            0.0,
            true,
            lt_monotone,
        )
        .equality(near_one, 1e-15, "x = 1, L_t(1,1) = 1 for every t"),
    ]
}
