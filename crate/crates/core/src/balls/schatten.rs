use std::f64::consts::{LN_2, PI};

use super::{check_n, Beta, Exponent, LogVolume, VolumeFormula};
use crate::error::{domain, Result};
use crate::specfun::log_gamma;

/// Real dimension `d_n = beta n (n-1) / 2 + n` of the self-adjoint `n x n` matrices.
pub fn schatten_dimension(beta: Beta, n: usize) -> u64 {
    let n = n as u64;
    beta.as_u32() as u64 * n * n.saturating_sub(1) / 2 + n
}

/// The Schatten-2 ball is the Euclidean ball of dimension `d_n`.
pub fn log_volume_schatten2(beta: Beta, n: usize) -> Result<LogVolume> {
    check_n(n, 1)?;
    let d = schatten_dimension(beta, n) as f64;
    let value = 0.5 * d * PI.ln() - log_gamma(1.0 + 0.5 * d)?;
    Ok(LogVolume { value, formula: VolumeFormula::Schatten2Exact })
}

/// `ln c_{n,beta}` for the eigenvalue-to-matrix volume change.
///
/// The `ln 2` and `ln π` coefficients are accumulated separately (they are
/// exact half-integers), so the value is exactly zero at `n = 1`.
pub fn log_c_n_beta(beta: Beta, n: usize) -> Result<f64> {
    check_n(n, 1)?;
    let b = beta.value();
    let half_b = 0.5 * b;
    let nf = n as f64;
    let lg_half_b = log_gamma(half_b)?;

    let mut coef_ln2 = -nf;
    let mut coef_lnpi = -nf * half_b;
    let mut gammas = nf * lg_half_b - log_gamma(nf + 1.0)?;
    for k in 1..=n {
        let kf = k as f64;
        // ln 2 + (beta k/2) ln(2π) - (beta/2) ln 2 - ln Γ(beta k/2)
        coef_ln2 += 1.0 + half_b * kf - half_b;
        coef_lnpi += half_b * kf;
        gammas -= log_gamma(half_b * kf)?;
    }
    Ok(coef_ln2 * LN_2 + coef_lnpi * PI.ln() + gammas)
}

/// Exact log-volume of the operator-norm ball via Selberg's integral.
pub fn log_volume_schatten_inf(beta: Beta, n: usize) -> Result<LogVolume> {
    check_n(n, 1)?;
    let half_b = 0.5 * beta.value();
    let nf = n as f64;
    let d = schatten_dimension(beta, n) as f64;
    let lg_half_b = log_gamma(half_b)?;
    let mut sum = 0.0;
    for j in 0..n {
        let jf = j as f64;
        sum += 2.0 * log_gamma(1.0 + jf * half_b)? + log_gamma((jf + 1.0) * half_b)?
            - log_gamma(2.0 + (nf + jf - 1.0) * half_b)?
            - lg_half_b;
    }
    let value = log_c_n_beta(beta, n)? + d * LN_2 + log_gamma(nf + 1.0)? + sum;
    Ok(LogVolume { value, formula: VolumeFormula::SchattenInfExact })
}

/// Exact Schatten log-volume for `p` in {2, ∞}.
pub fn schatten_log_volume(p: Exponent, beta: Beta, n: usize) -> Result<LogVolume> {
    match p {
        Exponent::Finite(p) if p == 2.0 => log_volume_schatten2(beta, n),
        Exponent::Infinite => log_volume_schatten_inf(beta, n),
        Exponent::Finite(p) => {
            domain(format!("exact Schatten volumes exist only for p = 2 and p = inf, got p = {p}"))
        }
    }
}

/// `Δ(p) = ½ (p √π Γ(p/2) / (√e Γ((p+1)/2)))^{1/p}`, `Δ(∞) = ½`.
pub fn delta(p: Exponent) -> Result<f64> {
    match p {
        Exponent::Infinite => Ok(0.5),
        Exponent::Finite(p) => {
            let p = Exponent::finite(p)?.to_f64();
            let ln_inner = p.ln() + 0.5 * PI.ln() + log_gamma(0.5 * p)? - 0.5 - log_gamma(0.5 * (p + 1.0))?;
            Ok(0.5 * (ln_inner / p).exp())
        }
    }
}

/// Leading-order volume radius `n^{-(1/p+1/2)} Δ(p) (4π/beta)^{1/2} e^{3/4}`.
pub fn volume_radius_schatten_asymptotic(p: Exponent, beta: Beta, n: usize) -> Result<f64> {
    check_n(n, 1)?;
    let nf = n as f64;
    let ln = -(p.recip() + 0.5) * nf.ln() + delta(p)?.ln() + 0.5 * (4.0 * PI / beta.value()).ln() + 0.75;
    Ok(ln.exp())
}

/// `(1/d_n) ln vol - (expansion)`, where the expansion is
/// `-ln n + ½ ln(4π/beta) + ½` for `p = 2` and
/// `-½ ln n + ½ ln(4π/beta) + ¾ - ln 2` for `p = ∞`.
pub fn log_volume_expansion_residual(p: Exponent, beta: Beta, n: usize) -> Result<f64> {
    check_n(n, 2)?;
    let lv = schatten_log_volume(p, beta, n)?;
    let d = schatten_dimension(beta, n) as f64;
    let ln_n = (n as f64).ln();
    let common = 0.5 * (4.0 * PI / beta.value()).ln();
    let expansion = match p {
        Exponent::Infinite => -0.5 * ln_n + common + 0.75 - LN_2,
        Exponent::Finite(_) => -ln_n + common + 0.5,
    };
    Ok(lv.value / d - expansion)
}

/// `T_n = n^{1/2} vol(B_2)^{1/d_n} / vol(B_∞)^{1/d_n}` and `e_n = T_n Δ(∞)/Δ(2) - 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusRatio {
    pub t_n: f64,
    pub e_n: f64,
}

pub fn ratio_schatten_radii(beta: Beta, n: usize) -> Result<RadiusRatio> {
    check_n(n, 2)?;
    let d = schatten_dimension(beta, n);
    let two = log_volume_schatten2(beta, n)?;
    let inf = log_volume_schatten_inf(beta, n)?;
    let ln_t = 0.5 * (n as f64).ln() + two.log_radius_ratio(&inf, d)?;
    let ln_target = delta(Exponent::Finite(2.0))?.ln() - delta(Exponent::Infinite)?.ln();
    Ok(RadiusRatio { t_n: ln_t.exp(), e_n: (ln_t - ln_target).exp_m1() })
}
