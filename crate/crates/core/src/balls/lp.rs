use std::f64::consts::LN_2;

use super::{check_n, Exponent, LogVolume, VolumeFormula};
use crate::error::{domain, Result};
use crate::specfun::log_gamma;

/// `ln vol_n(B_p^n) = n ln 2 + n ln Γ(1 + 1/p) - ln Γ(1 + n/p)`, and exactly
/// `n ln 2` for the cube.
pub fn log_volume_lp(p: Exponent, n: usize) -> Result<LogVolume> {
    check_n(n, 1)?;
    let nf = n as f64;
    let value = match p {
        Exponent::Infinite => nf * LN_2,
        Exponent::Finite(p) => {
            let p = Exponent::finite(p)?.recip();
            nf * LN_2 + nf * log_gamma(1.0 + p)? - log_gamma(1.0 + nf * p)?
        }
    };
    Ok(LogVolume { value, formula: VolumeFormula::LpExact })
}

/// The limit `c_p = lim n^{1/p} vol_n(B_p^n)^{1/n} = 2 e^{1/p} p^{1/p} Γ(1 + 1/p)`.
pub fn lp_volume_constant(p: f64) -> Result<f64> {
    let r = Exponent::finite(p)?.recip();
    Ok(2.0 * (r + r * p.ln() + log_gamma(1.0 + r)?).exp())
}

/// Relative deviation `e_n` in `n^{1/p} vol_n(B_p^n)^{1/n} = c_p (1 + e_n)`.
pub fn e_n_lp(p: Exponent, n: usize) -> Result<f64> {
    let p = p.require_finite("e_n_lp (e_n vanishes identically for the cube)")?;
    check_n(n, 2)?;
    let nf = n as f64;
    let lv = log_volume_lp(Exponent::Finite(p), n)?.value;
    let log_c = lp_volume_constant(p)?.ln();
    Ok((nf.ln() / p + lv / nf - log_c).exp_m1())
}

/// Centering and scaling of the Gumbel limit for `||Z||_∞`, `Z` uniform in
/// `B_p^n`: `scale * ||Z||_∞ - a_n` converges to a standard Gumbel law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GumbelConstants {
    /// The centering `A_n^{(p)}`.
    pub a_n: f64,
    /// `n^{1/p} / (p ln n)^{1/p - 1}`.
    pub scale: f64,
    /// `K_p = 1 / (p^{1/p} Γ(1 + 1/p))`.
    pub k_p: f64,
}

pub fn gumbel_constants(p: f64, n: usize) -> Result<GumbelConstants> {
    let r = Exponent::finite(p)?.recip();
    check_n(n, 3)?;
    let ln_n = (n as f64).ln();
    let p_ln_n = p * ln_n;
    if p_ln_n <= 1.0 {
        return domain(format!("p ln n must exceed 1 (p = {p}, n = {n})"));
    }
    let ln_k = -(r * p.ln() + log_gamma(1.0 + r)?);
    let a_n = p_ln_n - (1.0 - p) / p * p_ln_n.ln() + p * ln_k;
    let scale = (r * ln_n - (r - 1.0) * p_ln_n.ln()).exp();
    Ok(GumbelConstants { a_n, scale, k_p: ln_k.exp() })
}

/// Finite-`n` offset `R_n^{(p)}` so that
/// `vol(D_p^n ∩ t (ln n)^{1/p} D_∞^n) = P[scale ||Z||_∞ - A_n <= R_n]`.
pub fn critical_offset_r(p: f64, n: usize, t: f64) -> Result<f64> {
    let g = gumbel_constants(p, n)?;
    if !(t > 0.0) {
        return domain(format!("dilation must be positive, got {t}"));
    }
    let nf = n as f64;
    let lv = log_volume_lp(Exponent::Finite(p), n)?.value;
    let r = 1.0 / p;
    // n^{1/p} vol^{1/n} / p^{1/p}
    let radius = (r * nf.ln() + lv / nf - r * p.ln()).exp();
    Ok(p * t * radius / 2.0 * nf.ln() - g.a_n)
}
