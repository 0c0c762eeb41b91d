//! Seeded samplers.
//!
//! Every sampler is a pure function of its parameters and a
//! [`RandomStream`]; Monte Carlo drivers give each sample its own stream, so
//! results do not depend on how samples are spread over threads.

mod ensembles;
mod lp;
mod stream;
mod tridiagonal;

pub use ensembles::{
    beta_hermite_eigenvalues, beta_hermite_norm2_squared, sample_beta_hermite_eigs, sample_gue_dense_eigs, sample_uniform_schatten2_ball,
    schatten2_ball_from, DENSE_MAX_N, EIGENVALUE_SCALE,
};
pub use lp::{
    lp_norm, sample_generalized_gaussian, sample_uniform_lp_ball, GeneralizedGaussian, LpSample, PolarDraw,
};
pub use stream::{RandomStream, StreamRng};
pub use tridiagonal::symmetric_tridiagonal_eigenvalues;

use crate::balls::Beta;

/// Which distribution an [`EigSample`] was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityTag {
    /// Density proportional to `exp(-|x|^2) prod |x_i - x_j|^beta`.
    BetaHermite,
    /// Eigenvalues of a uniform point of the Schatten-2 ball.
    UniformSchatten2Ball,
}

/// Eigenvalues sorted ascending.
///
/// The uniform random labelling of eigenvalues is not sampled; every
/// functional computed downstream is symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct EigSample {
    pub values: Vec<f64>,
    pub beta: Beta,
    pub density: DensityTag,
}

impl EigSample {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn max_abs(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }

    pub fn norm2_squared(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}
