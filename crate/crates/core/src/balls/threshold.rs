use super::{Beta, Exponent};
use crate::error::Result;
use crate::specfun::log_gamma;

/// Critical dilation for `D_p^n ∩ t (ln n)^{1/p} D_∞^n`:
/// `t_{p,∞} = e^{-1/p} / Γ(1 + 1/p)`, equal to 1 for `p = ∞`.
pub fn threshold_lp_inf(p: Exponent) -> Result<f64> {
    match p {
        Exponent::Infinite => Ok(1.0),
        Exponent::Finite(p) => {
            let r = Exponent::finite(p)?.recip();
            Ok((-r - log_gamma(1.0 + r)?).exp())
        }
    }
}

/// How well-founded a Schatten threshold value is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdStatus {
    /// `p, q < ∞`: the two-sided limit is established.
    Established,
    /// `(p, q, beta) = (2, ∞, 2)`, including the critical value.
    Proven,
    /// `q = ∞` otherwise: the `q -> ∞` limit of the finite formula, not proven.
    Conjectured,
}

impl ThresholdStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ThresholdStatus::Established => "established for finite p, q",
            ThresholdStatus::Proven => "proven (p = 2, q = inf, beta = 2)",
            ThresholdStatus::Conjectured => "conjectured for p != 2 or beta != 2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub value: f64,
    pub status: ThresholdStatus,
}

/// `t_{p,q,beta} = e^{(1/p - 1/q)/2} (2p / (p + q))^{1/q}`; for `q = ∞` the
/// limit `e^{1/(2p)}`. The value does not depend on `beta`.
pub fn threshold_schatten(p: Exponent, q: Exponent, beta: Beta) -> Result<Threshold> {
    let p = p.require_finite("threshold_schatten")?;
    let p = Exponent::finite(p)?.to_f64();
    match q {
        Exponent::Infinite => {
            let status = if p == 2.0 && beta == Beta::Two {
                ThresholdStatus::Proven
            } else {
                ThresholdStatus::Conjectured
            };
            Ok(Threshold { value: (0.5 / p).exp(), status })
        }
        Exponent::Finite(q) => {
            let q = Exponent::finite(q)?.to_f64();
            let ln = 0.5 * (1.0 / p - 1.0 / q) + (2.0 * p / (p + q)).ln() / q;
            Ok(Threshold { value: ln.exp(), status: ThresholdStatus::Established })
        }
    }
}
