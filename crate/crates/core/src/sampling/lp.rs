use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, StandardNormal};

use super::RandomStream;
use crate::balls::Exponent;
use crate::error::Result;

/// The law with density proportional to `exp(-|x|^p)` on the real line.
///
/// Drawn as `±W^{1/p}` with `W ~ Gamma(1/p, 1)`; `p = 1` and `p = 2` use the
/// exponential and normal samplers directly.
#[derive(Debug, Clone, Copy)]
pub struct GeneralizedGaussian {
    p: f64,
    gamma: Gamma<f64>,
}

impl GeneralizedGaussian {
    pub fn new(p: f64) -> Result<Self> {
        let p = Exponent::finite(p)?.to_f64();
        let gamma = Gamma::new(1.0 / p, 1.0).expect("shape 1/p is positive");
        Ok(Self { p, gamma })
    }
}

impl Distribution<f64> for GeneralizedGaussian {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        if self.p == 2.0 {
            let z: f64 = rng.sample(StandardNormal);
            return z * std::f64::consts::FRAC_1_SQRT_2;
        }
        let magnitude = if self.p == 1.0 {
            rng.sample::<f64, _>(Exp1)
        } else {
            self.gamma.sample(rng).powf(1.0 / self.p)
        };
        if rng.random::<bool>() {
            magnitude
        } else {
            -magnitude
        }
    }
}

/// One draw from the density proportional to `exp(-|x|^p)`.
pub fn sample_generalized_gaussian(p: f64, stream: &RandomStream) -> Result<f64> {
    Ok(GeneralizedGaussian::new(p)?.sample(&mut stream.rng()))
}

pub fn lp_norm(x: &[f64], p: Exponent) -> f64 {
    match p {
        Exponent::Infinite => x.iter().fold(0.0, |m, v| m.max(v.abs())),
        Exponent::Finite(p) if p == 1.0 => x.iter().map(|v| v.abs()).sum(),
        Exponent::Finite(p) if p == 2.0 => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
        Exponent::Finite(p) => x.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p),
    }
}

/// A uniform point of `B_p^n` in polar form, `Z = radius * y / y_norm`.
///
/// Keeping the parts separate lets callers evaluate `||Z||_q` as
/// `radius * ||y||_q / y_norm`, which is exactly `radius <= 1` when `q = p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarDraw {
    pub radius: f64,
    pub y: Vec<f64>,
    pub y_norm: f64,
}

impl PolarDraw {
    /// Draws `y` with i.i.d. generalized-Gaussian coordinates, then
    /// `radius = U^{1/n}`. For the cube the coordinates are uniform on
    /// `[-1, 1]` and `radius = y_norm = 1`.
    pub fn draw<R: Rng + ?Sized>(p: Exponent, n: usize, rng: &mut R) -> Result<Self> {
        match p {
            Exponent::Infinite => {
                let y = (0..n).map(|_| 2.0 * rng.random::<f64>() - 1.0).collect();
                Ok(Self { radius: 1.0, y, y_norm: 1.0 })
            }
            Exponent::Finite(pf) => {
                let law = GeneralizedGaussian::new(pf)?;
                loop {
                    let y: Vec<f64> = (0..n).map(|_| law.sample(rng)).collect();
                    let y_norm = lp_norm(&y, p);
                    let u: f64 = rng.random();
                    if y_norm > 0.0 {
                        return Ok(Self { radius: u.powf(1.0 / n as f64), y, y_norm });
                    }
                }
            }
        }
    }

    /// `||Z||_q` computed from the polar parts.
    pub fn norm(&self, q: Exponent) -> f64 {
        self.radius * (lp_norm(&self.y, q) / self.y_norm)
    }

    pub fn coordinates(&self) -> Vec<f64> {
        let s = self.radius / self.y_norm;
        self.y.iter().map(|v| v * s).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSample {
    pub coordinates: Vec<f64>,
    pub p: Exponent,
}

impl LpSample {
    pub fn n(&self) -> usize {
        self.coordinates.len()
    }
}

/// A uniform point of the `l_p^n` unit ball.
pub fn sample_uniform_lp_ball(p: Exponent, n: usize, stream: &RandomStream) -> Result<LpSample> {
    let draw = PolarDraw::draw(p, n, &mut stream.rng())?;
    Ok(LpSample { coordinates: draw.coordinates(), p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn draws(p: f64, count: usize, seed: u64) -> Vec<f64> {
        let law = GeneralizedGaussian::new(p).unwrap();
        let mut rng = RandomStream::new(seed, 0).rng();
        (0..count).map(|_| law.sample(&mut rng)).collect()
    }

    fn mean(v: &[f64]) -> f64 {
        v.iter().sum::<f64>() / v.len() as f64
    }

    #[test]
    fn gaussian_case_moments() {
        let x = draws(2.0, 1_000_000, 1);
        let m = mean(&x);
        let var = x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / x.len() as f64;
        // density e^{-x^2}: variance 1/2
        assert!(m.abs() < 4.0 * (0.5f64 / x.len() as f64).sqrt());
        assert!((var - 0.5).abs() < 0.005, "{var}");
    }

    #[test]
    fn laplace_case_abs_mean() {
        let x = draws(1.0, 1_000_000, 2);
        let m = mean(&x.iter().map(|v| v.abs()).collect::<Vec<_>>());
        assert!((m - 1.0).abs() < 0.01, "{m}");
    }

    #[test]
    fn generic_case_moment() {
        // for density ∝ e^{-|x|^p}, E|X|^p = 1/p
        for p in [1.5, 3.0, 5.0] {
            let x = draws(p, 200_000, 3);
            let m = mean(&x.iter().map(|v| v.abs().powf(p)).collect::<Vec<_>>());
            // Var |X|^p = 1/p (Gamma(1/p) second moment), so se = sqrt(1/p / N)
            let se = (1.0 / p / x.len() as f64).sqrt();
            assert!((m - 1.0 / p).abs() < 4.0 * se, "p = {p}: {m}");
        }
    }

    #[test]
    fn points_stay_in_ball() {
        for (p, n) in [(Exponent::Finite(1.0), 3), (Exponent::Finite(1.5), 7), (Exponent::Infinite, 4)] {
            for j in 0..2000 {
                let s = sample_uniform_lp_ball(p, n, &RandomStream::new(9, j)).unwrap();
                assert_eq!(s.n(), n);
                assert!(lp_norm(&s.coordinates, p) <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn radial_law() {
        let (n, r, count) = (5usize, 0.9f64, 100_000u64);
        let p = Exponent::Finite(1.5);
        let hits = (0..count)
            .filter(|&j| {
                let s = sample_uniform_lp_ball(p, n, &RandomStream::new(11, j)).unwrap();
                lp_norm(&s.coordinates, p) <= r
            })
            .count();
        let target = r.powi(n as i32);
        let se = (target * (1.0 - target) / count as f64).sqrt();
        assert!((hits as f64 / count as f64 - target).abs() < 3.0 * se);
    }

    #[test]
    fn cube_quadrant() {
        let count = 100_000u64;
        let hits = (0..count)
            .filter(|&j| {
                let s = sample_uniform_lp_ball(Exponent::Infinite, 2, &RandomStream::new(12, j)).unwrap();
                s.coordinates.iter().all(|&c| c > 0.0)
            })
            .count();
        let se = (0.25 * 0.75 / count as f64).sqrt();
        assert!((hits as f64 / count as f64 - 0.25).abs() < 3.0 * se);
    }

    #[test]
    fn polar_norm_exact_for_same_exponent() {
        let mut rng = RandomStream::new(3, 3).rng();
        for _ in 0..1000 {
            let d = PolarDraw::draw(Exponent::Finite(2.5), 6, &mut rng).unwrap();
            assert!(d.norm(Exponent::Finite(2.5)) <= 1.0);
        }
    }
}
