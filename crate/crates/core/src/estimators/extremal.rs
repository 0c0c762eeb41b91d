use super::{ks_distance, par_samples, EmpiricalCDF};
use crate::balls::{gumbel_constants, Beta, Exponent};
use crate::error::{domain, Result};
use crate::sampling::{sample_beta_hermite_eigs, DensityTag, EigSample, PolarDraw, RandomStream};

/// Rescaled extreme eigenvalues of one β-Hermite sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalPair {
    pub xmin: f64,
    pub xmax: f64,
}

/// `xmax = (2/√β) n^{1/6} (max X - √(βn))`, `xmin = (2/√β) n^{1/6} (min X + √(βn))`.
///
/// The spectral edge of `exp(-Σx^2) |Δ|^β` sits at `√(βn)`; for β = 2 this
/// is the familiar `√2 n^{1/6}(max X - √(2n))`.
pub fn extremal_scalings(sample: &EigSample) -> Result<ExtremalPair> {
    if sample.density != DensityTag::BetaHermite {
        return domain("extremal scalings need a β-Hermite sample");
    }
    let n = sample.n() as f64;
    let b = sample.beta.value();
    let edge = (b * n).sqrt();
    let scale = 2.0 / b.sqrt() * n.powf(1.0 / 6.0);
    Ok(ExtremalPair { xmin: scale * (sample.min() + edge), xmax: scale * (sample.max() - edge) })
}

/// [`extremal_scalings`] over `count` independent samples.
pub fn sample_extremal_pairs(beta: Beta, n: usize, count: usize, stream: &RandomStream) -> Result<Vec<ExtremalPair>> {
    par_samples(count, stream, |s| extremal_scalings(&sample_beta_hermite_eigs(beta, n, s)?))
}

/// `√2 n^{2/3} (n^{1/2} max|Z_i| - 2)` for a uniform point of the β = 2
/// Schatten-2 ball.
pub fn max_abs_scaling(sample: &EigSample) -> Result<f64> {
    if sample.density != DensityTag::UniformSchatten2Ball || sample.beta != Beta::Two {
        return domain("max-abs scaling needs a uniform Schatten-2 ball sample with beta = 2");
    }
    let n = sample.n() as f64;
    Ok(2f64.sqrt() * n.powf(2.0 / 3.0) * (n.sqrt() * sample.max_abs() - 2.0))
}

/// Standard Gumbel distribution function `exp(-exp(-x))`.
pub fn gumbel_cdf(x: f64) -> f64 {
    (-(-x).exp()).exp()
}

#[derive(Debug, Clone)]
pub struct GumbelCheck {
    pub ecdf: EmpiricalCDF,
    pub ks: f64,
}

/// Empirical law of `scale ||Z||_∞ - A_n` for `Z` uniform in `B_p^n`, and
/// its KS distance to the standard Gumbel law.
pub fn gumbel_check(p: f64, n: usize, count: usize, stream: &RandomStream) -> Result<GumbelCheck> {
    let g = gumbel_constants(p, n)?;
    if count == 0 {
        return domain("sample count must be positive");
    }
    let pe = Exponent::Finite(p);
    let stats = par_samples(count, stream, |s| {
        Ok(g.scale * PolarDraw::draw(pe, n, &mut s.rng())?.norm(Exponent::Infinite) - g.a_n)
    })?;
    let ecdf = EmpiricalCDF::new(stats)?;
    let ks = ks_distance(&ecdf, gumbel_cdf);
    Ok(GumbelCheck { ecdf, ks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::ks_two_sample;
    use crate::sampling::sample_uniform_schatten2_ball;

    #[test]
    fn single_eigenvalue() {
        let s = sample_beta_hermite_eigs(Beta::Two, 1, &RandomStream::new(0, 0)).unwrap();
        let e = extremal_scalings(&s).unwrap();
        assert!(e.xmax <= e.xmin);
        let v = s.values[0];
        assert!((e.xmax - e.xmin + 4.0).abs() < 1e-12);
        assert!((e.xmax - 2f64.sqrt() * (v - 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn beta_two_matches_classical_formula() {
        let s = sample_beta_hermite_eigs(Beta::Two, 50, &RandomStream::new(1, 0)).unwrap();
        let e = extremal_scalings(&s).unwrap();
        let n = 50f64;
        let classic = 2f64.sqrt() * n.powf(1.0 / 6.0) * (s.max() - (2.0 * n).sqrt());
        assert!((e.xmax - classic).abs() < 1e-12);
    }

    #[test]
    fn wrong_tags() {
        let b = sample_uniform_schatten2_ball(Beta::Two, 5, &RandomStream::new(0, 0)).unwrap();
        assert!(extremal_scalings(&b).is_err());
        let h = sample_beta_hermite_eigs(Beta::Two, 5, &RandomStream::new(0, 0)).unwrap();
        assert!(max_abs_scaling(&h).is_err());
        let b1 = sample_uniform_schatten2_ball(Beta::One, 5, &RandomStream::new(0, 0)).unwrap();
        assert!(max_abs_scaling(&b1).is_err());
        assert!(max_abs_scaling(&b).is_ok());
    }

    #[test]
    fn min_max_symmetry() {
        for beta in Beta::ALL {
            for n in [50, 100] {
                let pairs = sample_extremal_pairs(beta, n, 3000, &RandomStream::new(2, n as u64)).unwrap();
                let mx = EmpiricalCDF::new(pairs.iter().map(|p| p.xmax).collect()).unwrap();
                let mn = EmpiricalCDF::new(pairs.iter().map(|p| -p.xmin).collect()).unwrap();
                // two-sample critical value at 0.1% for m = n = 3000 is 0.050
                assert!(ks_two_sample(&mx, &mn) < 0.05, "beta {beta}, n {n}");
            }
        }
    }

    #[test]
    fn gumbel_small_case() {
        let g = gumbel_check(1.0, 1000, 4000, &RandomStream::new(3, 0)).unwrap();
        assert_eq!(g.ecdf.count(), 4000);
        assert!(g.ks < 0.08, "{}", g.ks);
        assert!(gumbel_check(1.0, 2, 10, &RandomStream::new(3, 0)).is_err());
    }

    #[test]
    fn gumbel_cdf_anchor() {
        assert!((gumbel_cdf(0.0) - (-1f64).exp()).abs() < 1e-16);
    }
}
