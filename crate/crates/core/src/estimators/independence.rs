use rand::Rng;

use super::{par_samples, sample_extremal_pairs, ExtremalPair};
use crate::balls::Beta;
use crate::error::{domain, Result};
use crate::sampling::{beta_hermite_norm2_squared, RandomStream};

pub const BOOTSTRAP_RESAMPLES: usize = 200;

/// Joint versus product probabilities of the rescaled extreme eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport {
    pub beta: Beta,
    pub n: usize,
    pub count: usize,
    pub grid: Vec<(f64, f64)>,
    /// `P[xmin <= x, xmax <= y]`.
    pub joint: Vec<f64>,
    /// `P[xmin <= x] P[xmax <= y]`.
    pub product: Vec<f64>,
    pub max_abs_gap: f64,
    /// Bootstrap standard error of `max_abs_gap`.
    pub gap_stderr: f64,
}

impl IndependenceReport {
    pub fn gaps(&self) -> Vec<f64> {
        self.joint.iter().zip(&self.product).map(|(j, p)| j - p).collect()
    }
}

/// `{-3, -2, -1, 0, 1}²`, inside the bulk of every `F_β`.
pub fn default_independence_grid() -> Vec<(f64, f64)> {
    let xs = [-3.0, -2.0, -1.0, 0.0, 1.0];
    xs.iter().flat_map(|&x| xs.iter().map(move |&y| (x, y))).collect()
}

fn joint_and_product(pairs: &[ExtremalPair], idx: &[usize], grid: &[(f64, f64)]) -> (Vec<f64>, Vec<f64>) {
    let m = idx.len() as f64;
    grid.iter()
        .map(|&(x, y)| {
            let (mut a, mut b, mut ab) = (0u64, 0u64, 0u64);
            for &i in idx {
                let lo = pairs[i].xmin <= x;
                let hi = pairs[i].xmax <= y;
                a += lo as u64;
                b += hi as u64;
                ab += (lo && hi) as u64;
            }
            (ab as f64 / m, (a as f64 / m) * (b as f64 / m))
        })
        .unzip()
}

fn max_gap(joint: &[f64], product: &[f64]) -> f64 {
    joint.iter().zip(product).fold(0.0, |m, (j, p)| m.max((j - p).abs()))
}

/// Probe of asymptotic independence of the smallest and largest rescaled
/// eigenvalues. The gap's standard error comes from a nonparametric
/// bootstrap driven by `stream.split(u64::MAX)`.
pub fn independence_probe(
    beta: Beta,
    n: usize,
    count: usize,
    grid: &[(f64, f64)],
    stream: &RandomStream,
) -> Result<IndependenceReport> {
    if grid.is_empty() || count < 2 {
        return domain("need a nonempty grid and at least two samples");
    }
    let pairs = sample_extremal_pairs(beta, n, count, stream)?;
    let all: Vec<usize> = (0..count).collect();
    let (joint, product) = joint_and_product(&pairs, &all, grid);
    let max_abs_gap = max_gap(&joint, &product);

    let boot = par_samples(BOOTSTRAP_RESAMPLES, &stream.split(u64::MAX), |s| {
        let mut rng = s.rng();
        let idx: Vec<usize> = (0..count).map(|_| rng.random_range(0..count)).collect();
        let (j, p) = joint_and_product(&pairs, &idx, grid);
        Ok(max_gap(&j, &p))
    })?;
    let mean = boot.iter().sum::<f64>() / boot.len() as f64;
    let var = boot.iter().map(|g| (g - mean).powi(2)).sum::<f64>() / (boot.len() - 1) as f64;

    Ok(IndependenceReport {
        beta,
        n,
        count,
        grid: grid.to_vec(),
        joint,
        product,
        max_abs_gap,
        gap_stderr: var.sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CltSummary {
    pub mean: f64,
    pub stderr: f64,
    pub variance: f64,
    pub count: usize,
}

/// Mean of `n ((1/n) Σ (X_i / √(βn))^2)^{1/2} - n/2` over β-Hermite samples.
///
/// Only `Σ X_i^2` enters, which is read off the tridiagonal model's
/// Frobenius norm rather than its eigenvalues.
pub fn norm_clt_check(beta: Beta, n: usize, count: usize, stream: &RandomStream) -> Result<CltSummary> {
    if n < 10 {
        return domain(format!("n must be at least 10, got {n}"));
    }
    if count < 2 {
        return domain("need at least two samples");
    }
    let nf = n as f64;
    let b = beta.value();
    let stats = par_samples(count, stream, |s| {
        let sum_sq = beta_hermite_norm2_squared(beta, n, &mut s.rng());
        Ok(nf * ((sum_sq / (b * nf * nf)).sqrt() - 0.5))
    })?;
    let mean = stats.iter().sum::<f64>() / count as f64;
    let variance = stats.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (count - 1) as f64;
    Ok(CltSummary { mean, stderr: (variance / count as f64).sqrt(), variance, count })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_two_gap_small() {
        let r = independence_probe(Beta::Two, 100, 3000, &default_independence_grid(), &RandomStream::new(1, 0)).unwrap();
        assert_eq!(r.joint.len(), 25);
        assert!(r.joint.iter().chain(&r.product).all(|v| (0.0..=1.0).contains(v)));
        assert!(r.max_abs_gap <= 0.05, "{}", r.max_abs_gap);
        assert!(r.gap_stderr > 0.0);
        let g = r.gaps();
        assert_eq!(g.iter().fold(0f64, |m, v| m.max(v.abs())), r.max_abs_gap);
    }

    #[test]
    fn degenerate_corner() {
        let r = independence_probe(Beta::Two, 100, 3000, &[(-5.0, 3.0)], &RandomStream::new(2, 0)).unwrap();
        assert!(r.max_abs_gap <= 2.0 * r.gap_stderr.max(1.0 / 3000.0), "{} vs {}", r.max_abs_gap, r.gap_stderr);
    }

    #[test]
    fn clt_beta_two_centred() {
        let c = norm_clt_check(Beta::Two, 100, 20_000, &RandomStream::new(3, 0)).unwrap();
        assert!(c.mean.abs() < 4.0 * c.stderr, "{} ± {}", c.mean, c.stderr);
    }

    #[test]
    fn clt_mean_matches_exact_second_moment() {
        // E Σ X^2 = d_n / 2 gives a limiting mean of 1/(2β) - 1/4
        for beta in [Beta::One, Beta::Four] {
            let c = norm_clt_check(beta, 200, 20_000, &RandomStream::new(4, 0)).unwrap();
            let target = 0.5 / beta.value() - 0.25;
            assert!((c.mean - target).abs() < 4.0 * c.stderr + 0.01, "beta {beta}: {} vs {target}", c.mean);
        }
    }

    #[test]
    fn clt_rejects_small_n() {
        assert!(norm_clt_check(Beta::One, 9, 10, &RandomStream::new(0, 0)).is_err());
    }
}
