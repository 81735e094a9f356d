//! Truncated power series in x = r² with double-double coefficients.
//!
//! Used for inequality margins near r = 0, where both sides agree to
//! several orders and a direct difference would be pure rounding noise.

use crate::dd::Dd;

/// Number of retained coefficients; enough for x ≤ 1/4.
pub(crate) const TERMS: usize = 64;

/// Coefficient differences below this are exact cancellations.
const ZERO_CUTOFF: f64 = 1e-28;

#[derive(Debug, Clone)]
pub(crate) struct PowerSeries(Vec<Dd>);

impl PowerSeries {
    fn from_fn(mut f: impl FnMut(usize) -> Dd) -> Self {
        PowerSeries((0..TERMS).map(&mut f).collect())
    }

    /// Series with c₀ = 1 and c_{k+1} = c_k · ratio(k).
    fn from_ratio(ratio: impl Fn(f64) -> Dd) -> Self {
        let mut c = Dd::ONE;
        PowerSeries::from_fn(|k| {
            let out = c;
            c = c * ratio(k as f64);
            out
        })
    }

    /// Finite polynomial; missing coefficients are zero.
    pub fn polynomial(coeffs: &[Dd]) -> Self {
        PowerSeries::from_fn(|k| coeffs.get(k).copied().unwrap_or(Dd::ZERO))
    }

    pub fn constant(v: Dd) -> Self {
        PowerSeries::from_fn(|k| if k == 0 { v } else { Dd::ZERO })
    }

    /// (2/π)K as a series in r²: ((1/2)_n / n!)².
    pub fn k_normalized() -> Self {
        PowerSeries::from_ratio(|k| Dd::ratio((2.0 * k + 1.0) * (2.0 * k + 1.0), 4.0 * (k + 1.0) * (k + 1.0)))
    }

    /// (2/π)E as a series in r²: (1/2)_n (−1/2)_n / (n!)².
    pub fn e_normalized() -> Self {
        PowerSeries::from_ratio(|k| Dd::ratio((2.0 * k + 1.0) * (2.0 * k - 1.0), 4.0 * (k + 1.0) * (k + 1.0)))
    }

    /// arth(r)/r = Σ r^{2n}/(2n+1).
    pub fn arth_over_r() -> Self {
        PowerSeries::from_fn(|k| Dd::ratio(1.0, 2.0 * k as f64 + 1.0))
    }

    /// (1 − s·x)^p by the binomial series.
    pub fn binomial(s: f64, p: f64) -> Self {
        PowerSeries::from_ratio(|k| Dd::ratio((k - p) * s, k + 1.0))
    }

    /// ln(4/r′) = 2 ln 2 + Σ_{n≥1} x^n/(2n).
    pub fn ln_4_over_rp() -> Self {
        PowerSeries::from_fn(|k| {
            if k == 0 {
                Dd::LN_2 * 2.0
            } else {
                Dd::ratio(1.0, 2.0 * k as f64)
            }
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        PowerSeries(self.0.iter().zip(&o.0).map(|(a, b)| *a + *b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        PowerSeries(self.0.iter().zip(&o.0).map(|(a, b)| *a - *b).collect())
    }

    pub fn scale(&self, s: Dd) -> Self {
        PowerSeries(self.0.iter().map(|a| *a * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        PowerSeries::from_fn(|n| {
            (0..=n).fold(Dd::ZERO, |acc, k| acc + self.0[k] * o.0[n - k])
        })
    }

    /// f^p for a series with f₀ = 1 (J. C. P. Miller's recurrence).
    pub fn pow(&self, p: Dd) -> Self {
        debug_assert!(self.0[0] == Dd::ONE);
        let f = &self.0;
        let mut g = vec![Dd::ONE];
        for n in 1..TERMS {
            let mut acc = Dd::ZERO;
            for k in 1..=n {
                let w = (p + Dd::ONE) * k as f64 - Dd::new(n as f64);
                acc = acc + w * f[k] * g[n - k];
            }
            g.push(acc / n as f64);
        }
        PowerSeries(g)
    }

    /// Replace coefficients that are cancellation residue by exact zeros.
    pub fn cleaned(mut self) -> Self {
        for c in &mut self.0 {
            if c.to_f64().abs() < ZERO_CUTOFF {
                *c = Dd::ZERO;
            }
        }
        self
    }

    /// Evaluate at x = r·r (formed exactly).
    pub fn eval_r(&self, r: f64) -> f64 {
        let x = Dd::prod(r, r);
        self.0
            .iter()
            .rev()
            .fold(Dd::ZERO, |acc, c| acc * x + *c)
            .to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_series_matches_agm() {
        let r: f64 = 0.4;
        let rp = ((1.0 - r) * (1.0 + r)).sqrt();
        let mut a = 1.0f64;
        let mut b = rp;
        for _ in 0..10 {
            let an = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = an;
        }
        let want = 1.0 / a;
        assert!((PowerSeries::k_normalized().eval_r(r) - want).abs() < 1e-15);
    }

    #[test]
    fn pow_inverts() {
        let f = PowerSeries::arth_over_r();
        let back = f.pow(Dd::ratio(3.0, 4.0)).pow(Dd::ratio(4.0, 3.0));
        let diff = back.sub(&f).cleaned();
        assert!(diff.0.iter().all(|c| c.to_f64().abs() < 1e-28));
    }

    #[test]
    fn binomial_sqrt() {
        // (1 − x/2)^{1/2} at x = 0.09
        let s = PowerSeries::binomial(0.5, 0.5).eval_r(0.3);
        assert!((s - (1.0f64 - 0.045).sqrt()).abs() < 1e-16);
    }
}
