//! Fixed, seeded parameter samples shared by the suites.
//!
//! Every sample is drawn from its own ChaCha8 stream so adding a suite never
//! perturbs the parameters of another.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5_eed0_f2f1;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// `n` triples with a, b ∈ [0.1, 2.5] and c ∈ [0.2, 3].
pub fn hyp_triples(n: usize, stream: u64) -> Vec<(f64, f64, f64)> {
    let mut r = rng(stream);
    (0..n)
        .map(|_| (r.random_range(0.1..2.5), r.random_range(0.1..2.5), r.random_range(0.2..3.0)))
        .collect()
}

/// `n` triples with 2c = a + b + 1, a, b ∈ [0.1, 2.5].
pub fn symmetric_triples(n: usize, stream: u64) -> Vec<(f64, f64, f64)> {
    let mut r = rng(stream);
    (0..n)
        .map(|_| {
            let (a, b): (f64, f64) = (r.random_range(0.1..2.5), r.random_range(0.1..2.5));
            (a, b, 0.5 * (a + b + 1.0))
        })
        .collect()
}

/// `n` triples uniform in [0, 2]³.
pub fn cube_triples(n: usize, stream: u64) -> Vec<(f64, f64, f64)> {
    let mut r = rng(stream);
    (0..n)
        .map(|_| (r.random_range(0.0..=2.0), r.random_range(0.0..=2.0), r.random_range(0.0..=2.0)))
        .collect()
}

/// `n` pairs (a, c) with a ∈ (0.05, 0.95) and c ∈ (1 − a + 0.05, 3).
pub fn corollary_pairs(n: usize, stream: u64) -> Vec<(f64, f64)> {
    let mut r = rng(stream);
    (0..n)
        .map(|_| {
            let a: f64 = r.random_range(0.05..0.95);
            (a, r.random_range((1.05 - a)..3.0))
        })
        .collect()
}

/// `n` triples (a, b, ε) with a, b ∈ (0.05, 3) and ab/(1+a+b) < ε < 1,
/// ε kept 2% of the window away from either end.
pub fn lemma71_triples(n: usize, stream: u64) -> Vec<(f64, f64, f64)> {
    let mut r = rng(stream);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (a, b): (f64, f64) = (r.random_range(0.05..3.0), r.random_range(0.05..3.0));
        let lo = a * b / (1.0 + a + b);
        if lo >= 0.95 {
            continue;
        }
        let u: f64 = r.random_range(0.02..0.98);
        out.push((a, b, lo + (1.0 - lo) * u));
    }
    out
}
