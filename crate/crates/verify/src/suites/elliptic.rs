//! Elliptic-integral identities and bounds.

use std::f64::consts::FRAC_2_PI;

use specfun_core::elliptic::{
    e_bound_margins, ellint_k_series, gen_legendre_residual, k_bound_margins, k_lower_power_margin,
    landen_inequality_margins, landen_residuals, legendre_residual, schwarzian_mu_residual, Modulus,
};
use specfun_core::means::{agm_value, MeanPair};
use specfun_core::SpecFunError;

use super::{absolute, relative, suite, worst_of, Suite};
use crate::error::VerifyError;
use crate::grid::GridSpec;
use crate::report::{fold_points, Judge, Sample, SuiteReport};

pub const GEN_LEGENDRE_A: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
/// (a, b) with a + b ≤ 1; (1/2, 1/2) is the equality case.
pub const LANDEN_AB: [(f64, f64); 7] = [
    (0.5, 0.5),
    (0.3, 0.6),
    (0.2, 0.2),
    (0.1, 0.8),
    (0.45, 0.5),
    (0.25, 0.25),
    (0.05, 0.9),
];
pub const SCHWARZIAN_A: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

fn legendre(r: f64) -> Result<Sample, SpecFunError> {
    Ok(absolute(&legendre_residual(Modulus::new(r)?)?))
}

fn gen_legendre(r: f64) -> Result<Sample, SpecFunError> {
    let m = Modulus::new(r)?;
    worst_of(&GEN_LEGENDRE_A, |&a| Ok(absolute(&gen_legendre_residual(a, m)?)))
}

fn landen_id<const I: usize>(r: f64) -> Result<Sample, SpecFunError> {
    let (first, second) = landen_residuals(r)?;
    Ok(relative(if I == 0 { &first } else { &second }))
}

fn landen_ineq<const I: usize>(r: f64) -> Result<Sample, SpecFunError> {
    worst_of(&LANDEN_AB, |&(a, b)| {
        Ok(Sample::margin(landen_inequality_margins(a, b, a + b, r)?.as_array()[I]))
    })
}

fn k_bound<const I: usize>(r: f64) -> Result<Sample, SpecFunError> {
    Ok(Sample::margin(k_bound_margins(r)?.as_array()[I]))
}

fn muir(r: f64) -> Result<Sample, SpecFunError> {
    Ok(Sample::margin(e_bound_margins(r)?.muir))
}

fn e_upper(r: f64) -> Result<Sample, SpecFunError> {
    Ok(Sample::margin(e_bound_margins(r)?.upper))
}

fn agm_gauss(r: f64) -> Result<Sample, SpecFunError> {
    let m = Modulus::new(r)?;
    let agm = agm_value(MeanPair::new(1.0, m.r_prime())?);
    let product = agm * FRAC_2_PI * ellint_k_series(m)?;
    Ok(Sample::with_sides(-(product - 1.0).abs(), product, 1.0))
}

fn schwarzian(r: f64) -> Result<Sample, SpecFunError> {
    worst_of(&SCHWARZIAN_A, |&a| Ok(relative(&schwarzian_mu_residual(a, r)?)))
}

fn at_zero(r: f64) -> bool {
    r == 0.0
}

/// Sharpness probe for the lower bound (π/2)(arth r/r)^p < K(r): reports the
/// margins for exponent `p`. With p above 3/4 some margin is expected to go
/// negative; a finite grid can only give evidence, not proof.
pub fn k_exponent_probe(p: f64, grid: &GridSpec) -> Result<SuiteReport, VerifyError> {
    let pts = grid.points()?;
    let judge = Judge { tolerance: 0.0, strict: true };
    let fold = fold_points(&pts, |r| Ok((Sample::margin(k_lower_power_margin(r, p)?), judge)));
    Ok(fold.finish(&format!("arth-exponent({p})"), 0.0))
}

const UNIT_LOGIT: GridSpec = GridSpec::logit(0.0, 1.0, 1000);
const LANDEN_GRID: GridSpec = GridSpec::logit(0.0, 0.99, 1000);

pub(super) fn suites() -> Vec<Suite> {
    vec![
        suite(
            "legendre",
            "EK′ + E′K - KK′ = π/2 (absolute residual)",
            UNIT_LOGIT,
            1e-11,
            false,
            legendre,
        ),
        suite(
            "gen-legendre",
            "E_aK_a′ + E_a′K_a - K_aK_a′ = π sin(πa)/(4(1-a)) for a = 0.1, …, 0.9 (absolute residual)",
            GridSpec::logit(0.0, 1.0, 100),
            1e-9,
            false,
            gen_legendre,
        ),
        suite(
            "landen-id(1)",
            "K(2√r/(1+r)) = (1+r)K(r) (relative residual)",
            LANDEN_GRID,
            1e-11,
            false,
            landen_id::<0>,
        ),
        suite(
            "landen-id(2)",
            "K((1-r)/(1+r)) = ((1+r)/2)K′(r) (relative residual)",
            LANDEN_GRID,
            1e-11,
            false,
            landen_id::<1>,
        ),
        suite(
            "landen-ineq(1)",
            "F(ℓ²) ≤ (1+r)F(r²) for F = F(a,b;a+b;·), ℓ = 2√r/(1+r), a+b ≤ 1",
            LANDEN_GRID,
            1e-12,
            false,
            landen_ineq::<0>,
        ),
        suite(
            "landen-ineq(2)",
            "(1+r)F(r²) ≤ F(ℓ²) + (R(a,b) - log 16)/B(a,b)",
            LANDEN_GRID,
            1e-12,
            false,
            landen_ineq::<1>,
        ),
        suite(
            "landen-ineq(3)",
            "((1+r)/2)F(r′²) ≤ F(ℓ′²), ℓ′ = (1-r)/(1+r)",
            LANDEN_GRID,
            1e-12,
            false,
            landen_ineq::<2>,
        ),
        suite(
            "landen-ineq(4)",
            "F(ℓ′²) ≤ ((1+r)/2)[F(r′²) + (R(a,b) - log 16)/B(a,b)]",
            LANDEN_GRID,
            1e-12,
            false,
            landen_ineq::<3>,
        ),
        suite(
            "arth-bounds(lower)",
            "(π/2)(arth r/r)^(1/2) < K(r)",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<0>,
        ),
        suite(
            "arth-bounds(upper)",
            "K(r) < (π/2) arth r/r",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<1>,
        ),
        suite(
            "alzer-qiu-3/4",
            "(π/2)(arth r/r)^(3/4) < K(r)",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<2>,
        ),
        suite(
            "kuhnau",
            "9/(8+r²) < K(r)/log(4/r′)",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<3>,
        ),
        suite(
            "qiu-vamanamurthy",
            "K(r)/log(4/r′) < 1 + r′²/4",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<4>,
        ),
        suite(
            "alzer-K",
            "1 + (π/(4 log 2) - 1)r′² < K(r)/log(4/r′)",
            UNIT_LOGIT,
            0.0,
            true,
            k_bound::<5>,
        ),
        suite(
            "muir",
            "(2/π)E(r) ≥ ((1 + r′^(3/2))/2)^(2/3)",
            UNIT_LOGIT,
            0.0,
            false,
            muir,
        )
        .equality(at_zero, 0.0, "r = 0, both sides equal 1"),
        suite(
            "e-upper",
            "(2/π)E(r) ≤ ((1 + r′²)/2)^(1/2)",
            UNIT_LOGIT,
            0.0,
            false,
            e_upper,
        )
        .equality(at_zero, 0.0, "r = 0, both sides equal 1"),
        suite(
            "agm-gauss",
            "AGM(1, r′)·(2/π)·K(r) = 1 with K from the hypergeometric series",
            GridSpec::linear(0.01, 0.99, 50),
            1e-13,
            false,
            agm_gauss,
        ),
        suite(
            "schwarzian",
            "finite-difference Schwarzian of μ_a against its closed form, a ∈ {0.1, 0.25, 0.5, 0.75, 0.9}",
            GridSpec::linear(0.05, 0.95, 91),
            1e-4,
            false,
            schwarzian,
        ),
    ]
}
