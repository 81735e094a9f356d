//! Gauss 2F1 identities: contiguous relations, ODEs, Wronskian constants,
//! Elliott, Kummer, and the slope theorems.

use std::sync::OnceLock;

use specfun_core::hypergeo::{
    contiguous_residuals, corollary_313, elliott_identity, kummer_form30, ode_residual,
    pfq_terminating_3f2, theorem31_k_slope, theorem32_ell_slope, wronskian_identity, HypTriple,
    OdeKind, OdeSolution,
};
use specfun_core::special::{beta, gamma_ratio};
use specfun_core::SpecFunError;

use super::{absolute, as_index, relative, suite, worst_of, Suite};
use crate::grid::GridSpec;
use crate::report::Sample;
use crate::samples;

type Triple = (f64, f64, f64);

fn free_triples() -> &'static [Triple] {
    static S: OnceLock<Vec<Triple>> = OnceLock::new();
    S.get_or_init(|| samples::hyp_triples(20, 1))
}

fn symmetric_triples() -> &'static [Triple] {
    static S: OnceLock<Vec<Triple>> = OnceLock::new();
    S.get_or_init(|| samples::symmetric_triples(10, 2))
}

fn elliott_triples() -> &'static [Triple] {
    static S: OnceLock<Vec<Triple>> = OnceLock::new();
    S.get_or_init(|| samples::cube_triples(50, 3))
}

fn corollary_pairs() -> &'static [(f64, f64)] {
    static S: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    S.get_or_init(|| samples::corollary_pairs(10, 4))
}

fn lemma71_triples() -> &'static [Triple] {
    static S: OnceLock<Vec<Triple>> = OnceLock::new();
    S.get_or_init(|| samples::lemma71_triples(20, 5))
}

/// (a, b) for k(x) = F(a, b; a+b; 1 − e^{−x}).
pub const THM31_PARAMS: [(f64, f64); 5] = [(0.5, 0.5), (1.0, 2.0), (0.3, 0.7), (2.0, 3.0), (0.25, 1.5)];
/// (a, b, c) with a + b > c and c ∉ {a, b} (where ℓ is linear).
pub const THM32_PARAMS: [Triple; 5] = [
    (1.0, 1.0, 1.5),
    (0.7, 0.9, 1.0),
    (2.0, 1.5, 3.0),
    (0.3, 0.4, 0.2),
    (1.5, 1.5, 1.0),
];
/// (a, b, c) with 2c = a + b + 1 and c ≥ 1.
pub const WRONSKIAN_PARAMS: [Triple; 6] = [
    (0.5, 0.5, 1.0),
    (0.25, 0.75, 1.0),
    (1.0, 2.0, 2.0),
    (0.7, 1.9, 1.8),
    (1.5, 1.5, 2.0),
    (2.2, 0.8, 2.0),
];
pub const KUMMER_PARAMS: [Triple; 6] = [
    (0.5, 0.5, 1.0),
    (0.3, 0.8, 0.6),
    (1.2, 0.4, 0.9),
    (0.7, 0.7, 2.1),
    (0.0, 0.5, 0.6),
    (1.5, 2.0, 1.3),
];

/// Relative step used to compare slopes for the convexity part.
const SLOPE_STEP: f64 = 1.01;

fn triple(p: &Triple) -> Result<HypTriple, SpecFunError> {
    HypTriple::new(p.0, p.1, p.2)
}

fn contiguous<const I: usize>(z: f64) -> Result<Sample, SpecFunError> {
    worst_of(free_triples(), |p| Ok(relative(&contiguous_residuals(&triple(p)?, z)?[I])))
}

fn cor313(z: f64) -> Result<Sample, SpecFunError> {
    worst_of(corollary_pairs(), |&(a, c)| Ok(relative(&corollary_313(a, c, z)?)))
}

/// Slope in (lo, hi) and increasing, as relative margins.
fn slope_margins<F>(x: f64, lo: f64, hi: f64, slope: F) -> Result<Sample, SpecFunError>
where
    F: Fn(f64) -> Result<f64, SpecFunError>,
{
    let s = slope(x)?;
    let s_next = slope(x * SLOPE_STEP)?;
    let candidates = [
        Sample::with_sides((s - lo) / lo, s, lo),
        Sample::with_sides((hi - s) / hi, s, hi),
        Sample::with_sides((s_next - s) / s, s_next, s),
    ];
    Ok(Sample::worst(candidates).expect("nonempty"))
}

fn thm31(x: f64) -> Result<Sample, SpecFunError> {
    worst_of(&THM31_PARAMS, |&(a, b)| {
        let lo = a * b / (a + b);
        let hi = 1.0 / beta(a, b)?;
        slope_margins(x, lo, hi, |y| theorem31_k_slope(a, b, y))
    })
}

fn thm32(x: f64) -> Result<Sample, SpecFunError> {
    worst_of(&THM32_PARAMS, |&(a, b, c)| {
        let d = a + b - c;
        let lo = a * b / (c * d);
        let hi = gamma_ratio(&[c, d], &[a, b])?;
        slope_margins(x, lo, hi, |y| theorem32_ell_slope(a, b, c, y))
    })
}

fn ode(kind: OdeKind, solutions: &[OdeSolution], params: &[Triple], z: f64) -> Result<Sample, SpecFunError> {
    worst_of(params, |p| {
        let t = triple(p)?;
        worst_of(solutions, |&sol| Ok(relative(&ode_residual(kind, sol, &t, z)?)))
    })
}

const BOTH: [OdeSolution; 2] = [OdeSolution::Primary, OdeSolution::Complementary];

fn ode41(z: f64) -> Result<Sample, SpecFunError> {
    let sym = ode(OdeKind::Hypergeometric, &BOTH, symmetric_triples(), z)?;
    let free = ode(OdeKind::Hypergeometric, &[OdeSolution::Primary], free_triples(), z)?;
    Ok(Sample::worst([sym, free]).expect("nonempty"))
}

fn ode42(z: f64) -> Result<Sample, SpecFunError> {
    let sym = ode(OdeKind::Quadratic, &BOTH, symmetric_triples(), z)?;
    let free = ode(OdeKind::Quadratic, &[OdeSolution::Primary], free_triples(), z)?;
    Ok(Sample::worst([sym, free]).expect("nonempty"))
}

fn lemma42(z: f64) -> Result<Sample, SpecFunError> {
    ode(OdeKind::SqrtComplement, &[OdeSolution::Primary], free_triples(), z)
}

fn wronskian(z: f64) -> Result<Sample, SpecFunError> {
    worst_of(&WRONSKIAN_PARAMS, |p| Ok(absolute(&wronskian_identity(&triple(p)?, z)?)))
}

fn elliott(x: f64) -> Result<Sample, SpecFunError> {
    worst_of(elliott_triples(), |&(a, b, c)| Ok(absolute(&elliott_identity(a, b, c, x)?)))
}

fn kummer(x: f64) -> Result<Sample, SpecFunError> {
    worst_of(&KUMMER_PARAMS, |&(a, b, c)| {
        let r = kummer_form30(a, b, c, x)?;
        Ok(Sample::with_sides(-r.abs() / r.rhs.abs(), r.lhs, r.rhs))
    })
}

fn lemma71(x: f64) -> Result<Sample, SpecFunError> {
    let n = as_index("lemma7.1", x, 1)? as u32;
    worst_of(lemma71_triples(), |&(a, b, e)| {
        let v = pfq_terminating_3f2(n, a, b, e)?;
        Ok(Sample::with_sides(v, v, 0.0))
    })
}

/// Interior z-grid shared by the contiguous and ODE suites.
const Z_GRID: GridSpec = GridSpec::linear(0.05, 0.95, 19);

pub(super) fn suites() -> Vec<Suite> {
    vec![
        suite(
            "contiguous(3.6)",
            "z u′ = (a-1)(v - u), u = F(a-1,b;c;z), v = F(a,b;c;z); 20 seeded triples",
            Z_GRID,
            1e-10,
            false,
            contiguous::<0>,
        ),
        suite(
            "contiguous(3.7)",
            "z(1-z) v′ = (c-a)u + (a-c+bz)v; 20 seeded triples",
            Z_GRID,
            1e-10,
            false,
            contiguous::<1>,
        ),
        suite(
            "contiguous(3.8)",
            "(ab/c) z(1-z) F(a+1,b+1;c+1;z) = (c-a)u + (a-c+bz)v; 20 seeded triples",
            Z_GRID,
            1e-10,
            false,
            contiguous::<2>,
        ),
        suite(
            "contiguous(3.9)",
            "z(1-z) d/dz(uv₁ + u₁v - vv₁) = (1-a-b)[(1-z)uv₁ - zu₁v - (1-2z)vv₁]; 20 seeded triples",
            Z_GRID,
            1e-10,
            false,
            contiguous::<3>,
        ),
        suite(
            "contiguous(3.10)",
            "z(1-z) F′ = (c-b)F(a,b-1;c;z) + (b-c+az)F; 20 seeded triples",
            Z_GRID,
            1e-10,
            false,
            contiguous::<4>,
        ),
        suite(
            "cor3.13",
            "uv₁ + u₁v - vv₁ = Γ(c)²/(Γ(c+a-1)Γ(c-a+1)) for b = 1-a; 10 seeded (a, c)",
            Z_GRID,
            1e-10,
            false,
            cor313,
        ),
        suite(
            "thm3.1",
            "k(x) = F(a,b;a+b;1-e^-x): slope in (ab/(a+b), 1/B(a,b)) and increasing",
            GridSpec::log(1e-3, 20.0, 100),
            0.0,
            true,
            thm31,
        ),
        suite(
            "thm3.2",
            "ℓ(x) = F(a,b;c;1-(1+x)^(-1/d)): slope in (ab/(cd), Γ(c)Γ(d)/(Γ(a)Γ(b))) and increasing",
            GridSpec::log(1e-3, 20.0, 100),
            0.0,
            true,
            thm32,
        ),
        suite(
            "ode4.1",
            "hypergeometric equation residual for F(z) and, when 2c = a+b+1, F(1-z)",
            Z_GRID,
            1e-9,
            false,
            ode41,
        ),
        suite(
            "ode4.2",
            "quadratic-argument equation residual for F(z²) and, when 2c = a+b+1, F(1-z²)",
            Z_GRID,
            1e-9,
            false,
            ode42,
        ),
        suite(
            "lemma4.2",
            "equation residual for F(√(1-z²)) on real z ∈ (0, 1)",
            Z_GRID,
            1e-9,
            false,
            lemma42,
        ),
        suite(
            "wronskian4.4",
            "[(c-a)(uv₁ + u₁v) + (a-1)vv₁]·(z(1-z))^(c-1) = Γ(c)²/(Γ(a)Γ(b)) for 2c = a+b+1",
            Z_GRID,
            1e-9,
            false,
            wronskian,
        ),
        suite(
            "elliott",
            "F₁F₂ + F₃F₄ - F₂F₃ = Γ(a+b+1)Γ(b+c+1)/(Γ(a+b+c+3/2)Γ(b+1/2)); 50 seeded triples in [0,2]³",
            GridSpec::linear(0.1, 0.9, 9),
            1e-9,
            false,
            elliott,
        ),
        suite(
            "kummer30",
            "Kummer's product formula against D x^(-c)(1-x)^(c-a-b-1), relative to the right side",
            Z_GRID,
            1e-8,
            false,
            kummer,
        ),
        suite(
            "lemma7.1",
            "₃F₂(-n,a,b;1+a+b,1+ε-n;1) > 0 for ab/(1+a+b) < ε < 1; 20 seeded (a, b, ε)",
            GridSpec::linear(1.0, 50.0, 50),
            0.0,
            true,
            lemma71,
        )
        .integer(),
    ]
}
