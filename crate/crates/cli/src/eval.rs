//! Kernel functions reachable from `specfun eval`.

use specfun_core::elliptic::{
    ellint_e, ellint_ep, ellint_k, ellint_k_series, ellint_kp, ellipse_perimeter, gen_e, gen_k,
    gen_k_quadrature, mu, mu_a, mu_inverse, phi_k, Modulus,
};
use specfun_core::hypergeo::{
    gauss_2f1, gauss_2f1_derivative, gauss_value_at_1, pfq_terminating_3f2, theorem31_k,
    theorem32_ell, zero_balanced_r, HypTriple,
};
use specfun_core::means::{agm, log_mean, log_mean_t, power_mean, MeanPair};
use specfun_core::special::{
    anderson_f, ball_volume, berg_pedersen_density, beta, big_h, detemple_r, digamma, gamma,
    karatsuba_asymptotic_gamma, karatsuba_gamma_estimate, lemma_g, lemma_h, ln_gamma,
    pochhammer, ramanujan_h, ramanujan_theta, sphere_area, trigamma,
};
use specfun_core::{SeriesEval, SpecFunError};

use crate::error::{CliError, Result};
use crate::params::Params;

type Kernel<T> = std::result::Result<T, SpecFunError>;

/// A computed value with whatever metadata the kernel reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: f64,
    pub extras: Vec<(&'static str, f64)>,
    pub series: Option<SeriesEval>,
}

impl From<f64> for Outcome {
    fn from(value: f64) -> Self {
        Outcome {
            value,
            extras: Vec::new(),
            series: None,
        }
    }
}

impl From<SeriesEval> for Outcome {
    fn from(s: SeriesEval) -> Self {
        Outcome {
            value: s.value,
            extras: Vec::new(),
            series: Some(s),
        }
    }
}

pub struct Target {
    pub name: &'static str,
    pub summary: &'static str,
    /// Required parameters, in the order passed to `run`.
    pub params: &'static [&'static str],
    /// Optional parameters with defaults, appended after the required ones.
    pub defaults: &'static [(&'static str, f64)],
    run: fn(&[f64]) -> Kernel<Outcome>,
}

fn index(op: &'static str, name: &str, v: f64) -> Kernel<u32> {
    if v.fract() != 0.0 || !(0.0..=u32::MAX as f64).contains(&v) {
        return Err(SpecFunError::Parameter {
            op,
            detail: format!("{name} = {v} is not a nonnegative integer"),
        });
    }
    Ok(v as u32)
}

fn modulus(r: f64) -> Kernel<Modulus> {
    Modulus::new(r)
}

fn triple(a: &[f64]) -> Kernel<HypTriple> {
    HypTriple::new(a[0], a[1], a[2])
}

fn pair(a: f64, b: f64) -> Kernel<MeanPair> {
    MeanPair::new(a, b)
}

static TARGETS: &[Target] = &[
    // gamma family
    Target { name: "gamma", summary: "Γ(x)", params: &["x"], defaults: &[], run: |a| Ok(gamma(a[0])?.into()) },
    Target { name: "ln_gamma", summary: "ln Γ(x), x > 0", params: &["x"], defaults: &[], run: |a| Ok(ln_gamma(a[0])?.into()) },
    Target { name: "digamma", summary: "ψ(x), x > 0", params: &["x"], defaults: &[], run: |a| Ok(digamma(a[0])?.into()) },
    Target { name: "trigamma", summary: "ψ′(x), x > 0", params: &["x"], defaults: &[], run: |a| Ok(trigamma(a[0])?.into()) },
    Target { name: "beta", summary: "B(a, b)", params: &["a", "b"], defaults: &[], run: |a| Ok(beta(a[0], a[1])?.into()) },
    Target {
        name: "pochhammer",
        summary: "(a)_n",
        params: &["a", "n"],
        defaults: &[],
        run: |a| Ok(pochhammer(a[0], index("pochhammer", "n", a[1])?).into()),
    },
    Target {
        name: "detemple_r",
        summary: "R_n = Σ_{k≤n} 1/k − ln(n + 1/2)",
        params: &["n"],
        defaults: &[],
        run: |a| Ok(detemple_r(index("detemple_r", "n", a[0])?.into())?.into()),
    },
    Target {
        name: "big_h",
        summary: "H(n) = n²(R_n − γ)",
        params: &["n"],
        defaults: &[],
        run: |a| Ok(big_h(index("big_h", "n", a[0])?.into())?.into()),
    },
    Target {
        name: "karatsuba_gamma",
        summary: "γ estimate of order k with its error bound",
        params: &["k"],
        defaults: &[],
        run: |a| {
            let est = karatsuba_gamma_estimate(index("karatsuba_gamma", "k", a[0])?)?;
            Ok(Outcome {
                value: est.estimate,
                extras: vec![("error_bound", est.error_bound)],
                series: None,
            })
        },
    },
    Target {
        name: "karatsuba_asymptotic_gamma",
        summary: "Γ(x+1) from the asymptotic expansion with `terms` coefficients",
        params: &["x"],
        defaults: &[("terms", 7.0)],
        run: |a| {
            let n = index("karatsuba_asymptotic_gamma", "terms", a[1])?;
            Ok(karatsuba_asymptotic_gamma(a[0], n as usize)?.into())
        },
    },
    Target { name: "anderson_f", summary: "ln Γ(x+1)/(x ln x)", params: &["x"], defaults: &[], run: |a| Ok(anderson_f(a[0])?.into()) },
    Target { name: "lemma_g", summary: "Σ (n − x)/(n + x)³", params: &["x"], defaults: &[], run: |a| Ok(lemma_g(a[0])?.into()) },
    Target { name: "lemma_h", summary: "x²ψ′(1+x) − xψ(1+x) + ln Γ(1+x)", params: &["x"], defaults: &[], run: |a| Ok(lemma_h(a[0])?.into()) },
    Target { name: "ramanujan_h", summary: "G(x)⁶ − 8x³ − 4x² − x", params: &["x"], defaults: &[], run: |a| Ok(ramanujan_h(a[0])?.into()) },
    Target { name: "theta", summary: "Ramanujan's θ_x = 30·H(x)", params: &["x"], defaults: &[], run: |a| Ok(ramanujan_theta(a[0])?.into()) },
    Target {
        name: "ball_volume",
        summary: "Ω_n, volume of the unit n-ball",
        params: &["n"],
        defaults: &[],
        run: |a| Ok(ball_volume(index("ball_volume", "n", a[0])?)?.into()),
    },
    Target {
        name: "sphere_area",
        summary: "ω_{n−1} = nΩ_n, area of the unit sphere in ℝⁿ",
        params: &["n"],
        defaults: &[],
        run: |a| Ok(sphere_area(index("sphere_area", "n", a[0])?)?.into()),
    },
    Target {
        name: "berg_pedersen_density",
        summary: "density H(t) of the Stieltjes representation",
        params: &["t"],
        defaults: &[],
        run: |a| Ok(berg_pedersen_density(a[0])?.into()),
    },
    // hypergeometric
    Target { name: "2f1", summary: "F(a, b; c; z), −1 < z < 1", params: &["a", "b", "c", "z"], defaults: &[], run: |a| Ok(gauss_2f1(&triple(a)?, a[3])?.into()) },
    Target {
        name: "2f1_derivative",
        summary: "d^order/dz^order F(a, b; c; z)",
        params: &["a", "b", "c", "z"],
        defaults: &[("order", 1.0)],
        run: |a| Ok(gauss_2f1_derivative(&triple(a)?, a[3], index("2f1_derivative", "order", a[4])?)?.into()),
    },
    Target { name: "2f1_at_1", summary: "F(a, b; c; 1), c > a + b", params: &["a", "b", "c"], defaults: &[], run: |a| Ok(gauss_value_at_1(&triple(a)?)?.into()) },
    Target { name: "zero_balanced_r", summary: "R(a, b) = −2γ − ψ(a) − ψ(b)", params: &["a", "b"], defaults: &[], run: |a| Ok(zero_balanced_r(a[0], a[1])?.into()) },
    Target { name: "theorem31_k", summary: "F(a, b; a+b; 1 − e^{−x})", params: &["a", "b", "x"], defaults: &[], run: |a| Ok(theorem31_k(a[0], a[1], a[2])?.into()) },
    Target {
        name: "theorem32_ell",
        summary: "F(a, b; c; 1 − (1+x)^{−1/(a+b−c)})",
        params: &["a", "b", "c", "x"],
        defaults: &[],
        run: |a| Ok(theorem32_ell(a[0], a[1], a[2], a[3])?.into()),
    },
    Target {
        name: "3f2",
        summary: "₃F₂(−n, a, b; 1+a+b, 1+ε−n; 1)",
        params: &["n", "a", "b", "eps"],
        defaults: &[],
        run: |a| Ok(pfq_terminating_3f2(index("3f2", "n", a[0])?, a[1], a[2], a[3])?.into()),
    },
    // elliptic
    Target { name: "K", summary: "K(r) by the AGM", params: &["r"], defaults: &[], run: |a| Ok(ellint_k(modulus(a[0])?)?.into()) },
    Target { name: "K_series", summary: "K(r) by its hypergeometric series", params: &["r"], defaults: &[], run: |a| Ok(ellint_k_series(modulus(a[0])?)?.into()) },
    Target { name: "E", summary: "E(r)", params: &["r"], defaults: &[], run: |a| Ok(ellint_e(modulus(a[0])?)?.into()) },
    Target { name: "Kp", summary: "K′(r) = K(r′)", params: &["r"], defaults: &[], run: |a| Ok(ellint_kp(modulus(a[0])?)?.into()) },
    Target { name: "Ep", summary: "E′(r) = E(r′)", params: &["r"], defaults: &[], run: |a| Ok(ellint_ep(modulus(a[0])?)?.into()) },
    Target { name: "gen_K", summary: "K_a(r)", params: &["a", "r"], defaults: &[], run: |a| Ok(gen_k(a[0], modulus(a[1])?)?.into()) },
    Target { name: "gen_E", summary: "E_a(r)", params: &["a", "r"], defaults: &[], run: |a| Ok(gen_e(a[0], modulus(a[1])?)?.into()) },
    Target {
        name: "gen_K_quadrature",
        summary: "K_a(r) by tanh-sinh quadrature",
        params: &["a", "r"],
        defaults: &[],
        run: |a| Ok(gen_k_quadrature(a[0], modulus(a[1])?)?.into()),
    },
    Target { name: "mu", summary: "Grötzsch modulus μ(r)", params: &["r"], defaults: &[], run: |a| Ok(mu(modulus(a[0])?)?.into()) },
    Target { name: "mu_a", summary: "generalized modulus μ_a(r)", params: &["a", "r"], defaults: &[], run: |a| Ok(mu_a(a[0], modulus(a[1])?)?.into()) },
    Target {
        name: "mu_inverse",
        summary: "r with μ(r) = y",
        params: &["y"],
        defaults: &[],
        run: |a| {
            let m = mu_inverse(a[0])?;
            Ok(Outcome {
                value: m.r(),
                extras: vec![("r_prime", m.r_prime())],
                series: None,
            })
        },
    },
    Target { name: "phi_K", summary: "distortion function φ_K(r)", params: &["K", "r"], defaults: &[], run: |a| Ok(phi_k(a[0], a[1])?.into()) },
    Target {
        name: "ellipse_perimeter",
        summary: "perimeter of the ellipse with semi-axes 1 and b",
        params: &["b"],
        defaults: &[],
        run: |a| Ok(ellipse_perimeter(a[0])?.into()),
    },
    // means
    Target {
        name: "agm",
        summary: "arithmetic-geometric mean",
        params: &["a", "b"],
        defaults: &[],
        run: |a| {
            let (v, trace) = agm(pair(a[0], a[1])?);
            Ok(Outcome {
                value: v,
                extras: vec![("iterations", trace.iterations as f64)],
                series: None,
            })
        },
    },
    Target { name: "power_mean", summary: "A_t(a, b)", params: &["t", "a", "b"], defaults: &[], run: |a| Ok(power_mean(a[0], pair(a[1], a[2])?)?.into()) },
    Target { name: "log_mean", summary: "L(a, b)", params: &["a", "b"], defaults: &[], run: |a| Ok(log_mean(pair(a[0], a[1])?).into()) },
    Target { name: "log_mean_t", summary: "L_t(a, b)", params: &["t", "a", "b"], defaults: &[], run: |a| Ok(log_mean_t(a[0], pair(a[1], a[2])?)?.into()) },
];

pub fn targets() -> &'static [Target] {
    TARGETS
}

/// Exact name first, then a unique case-insensitive match.
pub fn find(name: &str) -> Result<&'static Target> {
    if let Some(t) = TARGETS.iter().find(|t| t.name == name) {
        return Ok(t);
    }
    let mut folded = TARGETS.iter().filter(|t| t.name.eq_ignore_ascii_case(name));
    match (folded.next(), folded.next()) {
        (Some(t), None) => Ok(t),
        _ => Err(CliError::usage(format!(
            "unknown eval target `{name}` (try `specfun eval list`)"
        ))),
    }
}

impl Target {
    pub fn signature(&self) -> String {
        let mut parts: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        parts.extend(self.defaults.iter().map(|(k, v)| format!("[{k}={v}]")));
        parts.join(" ")
    }

    /// Resolves parameters by name and evaluates.
    pub fn evaluate(&self, params: &Params) -> Result<(Vec<(&'static str, f64)>, Outcome)> {
        let mut allowed: Vec<&str> = self.params.to_vec();
        allowed.extend(self.defaults.iter().map(|(k, _)| *k));
        params.restrict(self.name, &allowed)?;
        let mut resolved = Vec::with_capacity(allowed.len());
        for &p in self.params {
            let v = params.real(p)?.ok_or_else(|| {
                CliError::usage(format!("{}: missing parameter `{p}` (usage: {})", self.name, self.signature()))
            })?;
            resolved.push((p, v));
        }
        for &(p, default) in self.defaults {
            resolved.push((p, params.real(p)?.unwrap_or(default)));
        }
        let args: Vec<f64> = resolved.iter().map(|(_, v)| *v).collect();
        let out = (self.run)(&args)?;
        Ok((resolved, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(name: &str, items: &[&str]) -> Result<Outcome> {
        let owned: Vec<String> = items.iter().map(|s| s.to_string()).collect();
        Ok(find(name)?.evaluate(&Params::parse(&owned)?)?.1)
    }

    #[test]
    fn names_are_unique() {
        for (i, t) in TARGETS.iter().enumerate() {
            assert!(TARGETS[i + 1..].iter().all(|u| u.name != t.name), "{}", t.name);
        }
    }

    #[test]
    fn documented_examples() {
        assert!((eval("gamma", &["x=0.5"]).unwrap().value - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        let m = eval("mu", &["r=0.7071067812"]).unwrap().value;
        assert!((m - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        assert!((eval("phi_K", &["K=1", "r=0.3"]).unwrap().value - 0.3).abs() < 1e-15);
    }

    #[test]
    fn case_insensitive_fallback() {
        assert_eq!(find("GAMMA").unwrap().name, "gamma");
        assert_eq!(find("phi_k").unwrap().name, "phi_K");
        // K and k are distinct only by case; `k` resolves to K uniquely
        assert_eq!(find("k").unwrap().name, "K");
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(eval("gamma", &[]), Err(CliError::Usage(_))));
        assert!(matches!(eval("gamma", &["x=1", "y=2"]), Err(CliError::Usage(_))));
        assert!(matches!(eval("gamma", &["x=0"]), Err(CliError::Kernel(_))));
        assert!(matches!(eval("big_h", &["n=1.5"]), Err(CliError::Kernel(_))));
        assert!(matches!(find("nope"), Err(CliError::Usage(_))));
    }

    #[test]
    fn defaults_apply() {
        let v = eval("karatsuba_asymptotic_gamma", &["x=10"]).unwrap().value;
        assert!((v / 3_628_800.0 - 1.0).abs() < 1e-9);
        let s = eval("2f1", &["a=1", "b=1", "c=2", "z=0.5"]).unwrap();
        assert!(s.series.is_some());
    }
}
