use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{domain, Result};

/// Arguments accepted by [`airy_ai`].
pub const AIRY_DOMAIN: (f64, f64) = (-15.0, 15.0);

/// Ai(0) = 3^{-2/3} / Γ(2/3)
const AI0: f64 = 0.355_028_053_887_817_2;
/// -Ai'(0) = 3^{-1/3} / Γ(1/3)
const AIP0: f64 = 0.258_819_403_792_806_8;

// The Maclaurin series loses roughly exp((2/3)|x|^{3/2}) ulps to
// cancellation, the asymptotic series is limited by its smallest term
// (about exp(-(4/3)|x|^{3/2})). These cut-offs keep both below 1e-10.
const SERIES_MAX: f64 = 6.0;
const SERIES_MIN: f64 = -7.0;

/// The Airy function `Ai(x)` and its derivative on `[-15, 15]`.
pub fn airy_ai(x: f64) -> Result<(f64, f64)> {
    if !(AIRY_DOMAIN.0..=AIRY_DOMAIN.1).contains(&x) {
        return domain(format!("airy_ai argument {x} outside [-15, 15]"));
    }
    Ok(if x > SERIES_MAX {
        decaying_asymptotic(x)
    } else if x < SERIES_MIN {
        oscillating_asymptotic(-x)
    } else {
        maclaurin(x)
    })
}

fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = sum x^{3k} / ((2*3)(5*6)...), g = sum x^{3k+1} / ((3*4)(6*7)...)
    let (mut f, mut g) = (1.0, x);
    let (mut tf, mut tg) = (1.0, x);
    // derivatives: f' starts at x^2/2, g' at 1
    let (mut df, mut dg) = (x * x / 2.0, 1.0);
    let (mut tdf, mut tdg) = (x * x / 2.0, 1.0);
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        tf *= x3 / ((k3 - 1.0) * k3);
        tg *= x3 / (k3 * (k3 + 1.0));
        if k >= 2 {
            tdf *= x3 / ((k3 - 3.0) * (k3 - 1.0));
            df += tdf;
        }
        tdg *= x3 / (k3 * (k3 - 2.0));
        f += tf;
        g += tg;
        dg += tdg;
        let scale = f.abs() + g.abs() + df.abs() + dg.abs();
        if tf.abs() + tg.abs() + tdf.abs() + tdg.abs() < 1e-18 * scale {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * df - AIP0 * dg)
}

/// Coefficients `u_k` and `v_k` of the large-argument expansions.
fn asymptotic_coeffs(count: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..count {
        let kf = k as f64;
        let next = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(next);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * next);
    }
    (u, v)
}

/// Sums `sum_k sign_k c_k / zeta^k`, stopping at the smallest term.
fn truncated_sum(coeffs: &[f64], zeta: f64, alternate: bool, step: usize, offset: usize) -> f64 {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    for (j, k) in (offset..coeffs.len()).step_by(step).enumerate() {
        let term = coeffs[k] / zeta.powi(k as i32);
        if term.abs() >= prev {
            break;
        }
        let sign = if alternate && j % 2 == 1 { -1.0 } else { 1.0 };
        sum += sign * term;
        prev = term.abs();
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn decaying_asymptotic(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let (u, v) = asymptotic_coeffs(40);
    let su = truncated_sum(&u, zeta, true, 1, 0);
    let sv = truncated_sum(&v, zeta, true, 1, 0);
    let pref = (-zeta).exp() / (2.0 * PI.sqrt());
    let q = x.powf(0.25);
    (pref / q * su, -pref * q * sv)
}

fn oscillating_asymptotic(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let (u, v) = asymptotic_coeffs(40);
    let pu = truncated_sum(&u, zeta, true, 2, 0);
    let qu = truncated_sum(&u, zeta, true, 2, 1);
    let pv = truncated_sum(&v, zeta, true, 2, 0);
    let qv = truncated_sum(&v, zeta, true, 2, 1);
    let phase = zeta + FRAC_PI_4;
    let (s, c) = phase.sin_cos();
    let q = z.powf(0.25);
    let ai = (s * pu - c * qu) / (PI.sqrt() * q);
    let aip = -q / PI.sqrt() * (c * pv + s * qv);
    (ai, aip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::log_gamma;
    use approx::assert_abs_diff_eq;

    /// Reference values computed with 30-digit arithmetic.
    const REFERENCE: [(f64, f64, f64); 15] = [
        (-15.0, 0.278_217_490_870_828_93, 0.272_374_204_308_642_02),
        (-10.0, 0.040_241_238_486_443_19, 0.996_265_044_132_790_06),
        (-7.5, 0.321_775_716_380_647_88, 0.318_809_506_698_554_6),
        (-7.0, 0.184_280_835_250_505_64, -0.771_008_168_410_126_5),
        (-5.0, 0.350_761_009_024_114_3, 0.327_192_818_554_443_14),
        (-2.0, 0.227_407_428_201_685_6, 0.618_259_020_741_691_4),
        (0.0, 0.355_028_053_887_817_24, -0.258_819_403_792_806_8),
        (1.0, 0.135_292_416_312_881_42, -0.159_147_441_296_793_2),
        (4.0, 9.515_638_512_048_019e-4, -1.958_640_950_204_179e-3),
        (5.0, 1.083_444_281_360_744_2e-4, -2.474_138_908_684_625e-4),
        (6.0, 9.947_694_360_252_89e-6, -2.476_520_039_703_495_5e-5),
        (6.5, 2.795_882_343_204_913_6e-6, -7.231_931_466_601_793e-6),
        (8.0, 4.692_207_616_099_231_6e-8, -1.341_439_297_906_786_6e-7),
        (10.0, 1.104_753_255_289_868_6e-10, -3.520_633_676_738_923_6e-10),
        (15.0, 2.164_962_520_737_992_3e-18, -8.420_567_954_017_773e-18),
    ];

    #[test]
    fn origin_matches_gamma_closed_form() {
        let (ai, aip) = airy_ai(0.0).unwrap();
        let ai0 = (-2.0 / 3.0 * 3f64.ln() - log_gamma(2.0 / 3.0).unwrap()).exp();
        let aip0 = -(-1.0 / 3.0 * 3f64.ln() - log_gamma(1.0 / 3.0).unwrap()).exp();
        assert_abs_diff_eq!(ai, ai0, epsilon = 1e-14);
        assert_abs_diff_eq!(aip, aip0, epsilon = 1e-14);
        assert_abs_diff_eq!(ai, 0.355_028_053_9, epsilon = 1e-10);
        assert_abs_diff_eq!(aip, -0.258_819_403_8, epsilon = 1e-10);
    }

    #[test]
    fn reference_table() {
        for &(x, ai, aip) in &REFERENCE {
            let (a, d) = airy_ai(x).unwrap();
            assert_abs_diff_eq!(a, ai, epsilon = 1e-10);
            assert_abs_diff_eq!(d, aip, epsilon = 1e-10);
        }
    }

    #[test]
    fn relative_accuracy_on_decaying_branch() {
        for &(x, ai, aip) in REFERENCE.iter().filter(|r| r.0 > SERIES_MAX) {
            let (a, d) = airy_ai(x).unwrap();
            assert!(((a - ai) / ai).abs() < 1e-10, "x={x}");
            assert!(((d - aip) / aip).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn decays_monotonically() {
        let mut prev = f64::INFINITY;
        let mut x = 2.0;
        while x <= 15.0 {
            let (a, _) = airy_ai(x).unwrap();
            assert!(a > 0.0 && a < prev, "x={x}");
            prev = a;
            x += 0.05;
        }
    }

    #[test]
    fn ode_residual() {
        // Ai'' from a fourth-order stencil on the analytic derivative; the
        // grid stays clear of the branch switches.
        let h = 1e-3;
        let d = |x: f64| airy_ai(x).unwrap().1;
        let mut x = -14.5;
        while x <= 14.5 {
            let second = (-d(x + 2.0 * h) + 8.0 * d(x + h) - 8.0 * d(x - h) + d(x - 2.0 * h)) / (12.0 * h);
            let (a, _) = airy_ai(x).unwrap();
            assert!((second - x * a).abs() <= 1e-8, "x={x}: {}", (second - x * a).abs());
            x += 0.37;
        }
    }

    #[test]
    fn branch_joins_are_continuous() {
        for edge in [SERIES_MAX, SERIES_MIN] {
            let a = maclaurin(edge);
            let b = if edge > 0.0 {
                decaying_asymptotic(edge)
            } else {
                oscillating_asymptotic(-edge)
            };
            assert_abs_diff_eq!(a.0, b.0, epsilon = 1e-10);
            assert_abs_diff_eq!(a.1, b.1, epsilon = 1e-10);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(airy_ai(15.5).is_err());
        assert!(airy_ai(-16.0).is_err());
        assert!(airy_ai(f64::NAN).is_err());
    }
}
