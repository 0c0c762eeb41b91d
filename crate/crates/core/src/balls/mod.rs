//! Exact log-volumes, volume-radius asymptotics and critical thresholds for
//! `l_p^n`-balls and Schatten `p`-balls of self-adjoint matrices.
//!
//! All volume arithmetic is carried out in natural-log space: `Γ(1 + d/2)`
//! overflows long before the matrix sizes of interest.

mod exponent;
mod lp;
mod schatten;
mod threshold;

pub use exponent::{Beta, Exponent};
pub use lp::{
    critical_offset_r, e_n_lp, gumbel_constants, log_volume_lp, lp_volume_constant, GumbelConstants,
};
pub use schatten::{
    delta, log_c_n_beta, log_volume_expansion_residual, log_volume_schatten2, log_volume_schatten_inf,
    ratio_schatten_radii, schatten_dimension, schatten_log_volume, volume_radius_schatten_asymptotic,
    RadiusRatio,
};
pub use threshold::{threshold_lp_inf, threshold_schatten, Threshold, ThresholdStatus};

use crate::error::{domain, Result};

/// Which closed form produced a [`LogVolume`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeFormula {
    LpExact,
    Schatten2Exact,
    SchattenInfExact,
    Asymptotic,
}

impl VolumeFormula {
    pub fn as_str(self) -> &'static str {
        match self {
            VolumeFormula::LpExact => "lp-exact",
            VolumeFormula::Schatten2Exact => "schatten-2-exact",
            VolumeFormula::SchattenInfExact => "schatten-inf-exact",
            VolumeFormula::Asymptotic => "asymptotic",
        }
    }

    pub fn is_exact(self) -> bool {
        self != VolumeFormula::Asymptotic
    }
}

/// Natural logarithm of a volume, tagged with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogVolume {
    pub value: f64,
    pub formula: VolumeFormula,
}

impl LogVolume {
    /// `(1/dim) (self - other)`, i.e. the log of the ratio of volume radii.
    ///
    /// Mixing an asymptotic value with an exact one is refused.
    pub fn log_radius_ratio(&self, other: &LogVolume, dim: u64) -> Result<f64> {
        if self.formula.is_exact() != other.formula.is_exact() {
            return domain("refusing to mix asymptotic and exact log-volumes");
        }
        Ok((self.value - other.value) / dim as f64)
    }
}

/// The `l_p^n` unit ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpBallSpec {
    pub p: Exponent,
    pub n: usize,
}

/// The Schatten `p`-ball in the space of `n x n` self-adjoint matrices over
/// the reals (`beta = 1`), complexes (`2`) or quaternions (`4`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchattenBallSpec {
    pub p: Exponent,
    pub beta: Beta,
    pub n: usize,
}

impl SchattenBallSpec {
    pub fn dimension(&self) -> u64 {
        schatten_dimension(self.beta, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BallSpec {
    Lp(LpBallSpec),
    Schatten(SchattenBallSpec),
}

impl BallSpec {
    pub fn lp(p: Exponent, n: usize) -> Self {
        BallSpec::Lp(LpBallSpec { p, n })
    }

    pub fn schatten(p: Exponent, beta: Beta, n: usize) -> Self {
        BallSpec::Schatten(SchattenBallSpec { p, beta, n })
    }

    /// The matrix size or vector length.
    pub fn n(&self) -> usize {
        match self {
            BallSpec::Lp(b) => b.n,
            BallSpec::Schatten(b) => b.n,
        }
    }

    pub fn p(&self) -> Exponent {
        match self {
            BallSpec::Lp(b) => b.p,
            BallSpec::Schatten(b) => b.p,
        }
    }

    /// Real dimension of the ambient space.
    pub fn dimension(&self) -> u64 {
        match self {
            BallSpec::Lp(b) => b.n as u64,
            BallSpec::Schatten(b) => b.dimension(),
        }
    }

    /// Exact log-volume; Schatten balls are only supported for `p` in {2, ∞}.
    pub fn log_volume(&self) -> Result<LogVolume> {
        match *self {
            BallSpec::Lp(b) => log_volume_lp(b.p, b.n),
            BallSpec::Schatten(b) => schatten_log_volume(b.p, b.beta, b.n),
        }
    }
}

/// Ball family without a dimension, used where the dimension varies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BallFamily {
    Lp(Exponent),
    Schatten(Exponent, Beta),
}

impl BallFamily {
    pub fn at(self, n: usize) -> BallSpec {
        match self {
            BallFamily::Lp(p) => BallSpec::lp(p, n),
            BallFamily::Schatten(p, beta) => BallSpec::schatten(p, beta, n),
        }
    }
}

pub(crate) fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return domain(format!("dimension n = {n} must be at least {min}"));
    }
    Ok(())
}
