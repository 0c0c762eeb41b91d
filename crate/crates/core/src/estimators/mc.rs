use crate::error::{domain, Result};

pub const DEFAULT_CI_LEVEL: f64 = 0.95;

/// A Bernoulli-proportion estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCEstimate {
    pub value: f64,
    /// Binomial standard error `sqrt(v (1 - v) / count)`.
    pub stderr: f64,
    pub successes: u64,
    pub count: u64,
    pub seed: u64,
    pub ci_level: f64,
}

impl MCEstimate {
    pub fn from_counts(successes: u64, count: u64, seed: u64) -> Result<Self> {
        if count == 0 || successes > count {
            return domain(format!("invalid counts {successes}/{count}"));
        }
        let value = successes as f64 / count as f64;
        let stderr = (value * (1.0 - value) / count as f64).sqrt();
        Ok(Self { value, stderr, successes, count, seed, ci_level: DEFAULT_CI_LEVEL })
    }

    pub fn with_ci_level(mut self, level: f64) -> Result<Self> {
        if !(level > 0.0 && level < 1.0) {
            return domain(format!("confidence level must lie in (0, 1), got {level}"));
        }
        self.ci_level = level;
        Ok(self)
    }

    /// Wilson score interval at `ci_level`.
    pub fn wilson_interval(&self) -> (f64, f64) {
        let z = normal_quantile(0.5 + 0.5 * self.ci_level);
        let n = self.count as f64;
        let p = self.value;
        let z2n = z * z / n;
        let centre = (p + 0.5 * z2n) / (1.0 + z2n);
        let half = z / (1.0 + z2n) * (p * (1.0 - p) / n + 0.25 * z2n / n).sqrt();
        ((centre - half).max(0.0), (centre + half).min(1.0))
    }
}

/// Standard normal quantile (Acklam's rational approximation, relative
/// error below 1.2e-9).
pub fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e1,
        2.209460984245205e2,
        -2.759285104469687e2,
        1.383_577_518_672_69e2,
        -3.066479806614716e1,
        2.506628277459239,
    ];
    const B: [f64; 5] =
        [-5.447609879822406e1, 1.615858368580409e2, -1.556989798598866e2, 6.680131188771972e1, -1.328068155288572e1];
    const C: [f64; 6] = [
        -7.784894002430293e-3,
        -3.223964580411365e-1,
        -2.400758277161838,
        -2.549732539343734,
        4.374664141464968,
        2.938163982698783,
    ];
    const D: [f64; 4] = [7.784695709041462e-3, 3.224671290700398e-1, 2.445134137142996, 3.754408661907416];
    const LOW: f64 = 0.02425;

    if p <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if p >= 1.0 {
        return f64::INFINITY;
    }
    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    if p < LOW {
        tail((-2.0 * p.ln()).sqrt())
    } else if p > 1.0 - LOW {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quantiles() {
        assert_eq!(normal_quantile(0.5), 0.0);
        assert_abs_diff_eq!(normal_quantile(0.975), 1.959963984540054, epsilon = 1e-8);
        assert_abs_diff_eq!(normal_quantile(0.01), -2.326347874040841, epsilon = 1e-8);
        assert_abs_diff_eq!(normal_quantile(1e-6), -4.753424308822899, epsilon = 1e-7);
    }

    #[test]
    fn bernoulli_bounds() {
        for (s, c) in [(0, 10), (10, 10), (5, 10), (1, 1000)] {
            let e = MCEstimate::from_counts(s, c, 0).unwrap();
            assert!(e.stderr <= 0.5 / (c as f64).sqrt());
            let (lo, hi) = e.wilson_interval();
            assert!(lo <= e.value && e.value <= hi && (0.0..=1.0).contains(&lo) && hi <= 1.0);
        }
        assert!(MCEstimate::from_counts(3, 2, 0).is_err());
        assert!(MCEstimate::from_counts(0, 0, 0).is_err());
        assert!(MCEstimate::from_counts(1, 2, 0).unwrap().with_ci_level(1.0).is_err());
    }

    #[test]
    fn wilson_known_value() {
        // 8 of 10 at 95%: (0.4902, 0.9433)
        let (lo, hi) = MCEstimate::from_counts(8, 10, 0).unwrap().wilson_interval();
        assert_abs_diff_eq!(lo, 0.4901624, epsilon = 1e-6);
        assert_abs_diff_eq!(hi, 0.9433178, epsilon = 1e-6);
    }
}
