use nalgebra::DMatrix;
use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use super::tridiagonal::ql_eigenvalues;
use super::{DensityTag, EigSample, RandomStream};
use crate::balls::{schatten_dimension, Beta};
use crate::error::{domain, Error, Result};

/// Global factor applied to the eigenvalues of the classical tridiagonal
/// model, whose eigenvalue density is `exp(-|x|^2/2) |Δ|^β`, to reach
/// `exp(-|x|^2) |Δ|^β`.
pub const EIGENVALUE_SCALE: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Largest matrix size accepted by [`sample_gue_dense_eigs`].
pub const DENSE_MAX_N: usize = 64;

fn chi<R: Rng + ?Sized>(k: f64, rng: &mut R) -> f64 {
    Gamma::new(k / 2.0, 2.0).expect("positive shape").sample(rng).sqrt()
}

/// Eigenvalues (ascending) with joint density proportional to
/// `exp(-Σx_i^2) Π|x_i - x_j|^β`, drawn from the tridiagonal model.
///
/// Returns `None` if the eigensolver fails twice; callers attach context.
pub fn beta_hermite_eigenvalues<R: Rng + ?Sized>(beta: Beta, n: usize, rng: &mut R) -> Option<Vec<f64>> {
    let b = beta.value();
    // N(0, 2) / √2 on the diagonal, χ_{β(n-k)} / √2 below it
    let diag: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let sub: Vec<f64> = (1..n)
        .map(|k| chi(b * (n - k) as f64, rng) / 2f64.sqrt())
        .collect();
    let ev = ql_eigenvalues(&diag, &sub, false).or_else(|| ql_eigenvalues(&diag, &sub, true))?;
    Some(ev.into_iter().map(|x| x * EIGENVALUE_SCALE).collect())
}

/// `Σ x_i^2` for a β-Hermite draw without diagonalising.
///
/// Consumes the generator exactly like [`beta_hermite_eigenvalues`] and
/// returns `s^2 (Σ d_i^2 + 2 Σ e_i^2)`, the squared Frobenius norm of the
/// tridiagonal matrix, which equals the sum of squared eigenvalues.
pub fn beta_hermite_norm2_squared<R: Rng + ?Sized>(beta: Beta, n: usize, rng: &mut R) -> f64 {
    let b = beta.value();
    let diag: f64 = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal).powi(2)).sum();
    let sub: f64 = (1..n).map(|k| (chi(b * (n - k) as f64, rng) / 2f64.sqrt()).powi(2)).sum();
    EIGENVALUE_SCALE * EIGENVALUE_SCALE * (diag + 2.0 * sub)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    Ok(())
}

pub fn sample_beta_hermite_eigs(beta: Beta, n: usize, stream: &RandomStream) -> Result<EigSample> {
    check_n(n)?;
    let mut rng = stream.rng();
    let values = beta_hermite_eigenvalues(beta, n, &mut rng)
        .ok_or(Error::NoConvergence { seed: stream.seed(), stream: stream.index() })?;
    Ok(EigSample { values, beta, density: DensityTag::BetaHermite })
}

/// Oracle sampler for β = 2: eigenvalues of a dense Hermitian matrix with
/// density proportional to `exp(-Tr A^2)`.
///
/// `Tr A^2 = Σ a_ii^2 + 2 Σ_{i<j} |a_ij|^2`, so the diagonal is N(0, 1/2) and
/// the real and imaginary parts above it are N(0, 1/4).
pub fn sample_gue_dense_eigs(n: usize, stream: &RandomStream) -> Result<EigSample> {
    check_n(n)?;
    if n > DENSE_MAX_N {
        return domain(format!("dense oracle is limited to n <= {DENSE_MAX_N}, got {n}"));
    }
    let mut rng = stream.rng();
    let mut a = DMatrix::<Complex<f64>>::zeros(n, n);
    for i in 0..n {
        let z: f64 = rng.sample(StandardNormal);
        a[(i, i)] = Complex::new(z * 0.5f64.sqrt(), 0.0);
        for j in i + 1..n {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let v = Complex::new(0.5 * re, 0.5 * im);
            a[(i, j)] = v;
            a[(j, i)] = v.conj();
        }
    }
    let mut values: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(EigSample { values, beta: Beta::Two, density: DensityTag::BetaHermite })
}

/// Maps a β-Hermite sample and `u ∈ [0, 1]` to `u^{1/d_n} X / ||X||_2`.
pub fn schatten2_ball_from(x: &EigSample, u: f64) -> Result<EigSample> {
    let norm = x.norm2_squared().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return domain("eigenvalue vector has zero or non-finite norm");
    }
    let d = schatten_dimension(x.beta, x.n()) as f64;
    let s = u.powf(1.0 / d) / norm;
    Ok(EigSample {
        values: x.values.iter().map(|v| v * s).collect(),
        beta: x.beta,
        density: DensityTag::UniformSchatten2Ball,
    })
}

/// Eigenvalues of a uniform random point of the Schatten-2 unit ball.
pub fn sample_uniform_schatten2_ball(beta: Beta, n: usize, stream: &RandomStream) -> Result<EigSample> {
    check_n(n)?;
    let mut rng = stream.rng();
    loop {
        let values = beta_hermite_eigenvalues(beta, n, &mut rng)
            .ok_or(Error::NoConvergence { seed: stream.seed(), stream: stream.index() })?;
        let u: f64 = rng.random();
        let x = EigSample { values, beta, density: DensityTag::BetaHermite };
        if x.norm2_squared() > 0.0 {
            return schatten2_ball_from(&x, u);
        }
    }
}
