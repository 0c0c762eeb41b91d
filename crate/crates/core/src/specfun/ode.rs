use crate::error::{domain, Error, Result};

/// Step-size control for [`integrate_ode`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeStepperConfig {
    pub initial_step: f64,
    pub rtol: f64,
    pub atol: f64,
}

impl OdeStepperConfig {
    pub fn new(initial_step: f64, rtol: f64, atol: f64) -> Result<Self> {
        let cfg = Self { initial_step, rtol, atol };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return domain(format!("initial step must be positive, got {}", self.initial_step));
        }
        for (name, tol) in [("rtol", self.rtol), ("atol", self.atol)] {
            if !(tol > 0.0 && tol <= 1e-2) {
                return domain(format!("{name} must lie in (0, 1e-2], got {tol}"));
            }
        }
        Ok(())
    }
}

impl Default for OdeStepperConfig {
    /// Effectively pure relative control: solutions that start near zero
    /// (Airy data far in the decaying tail) keep their relative accuracy.
    fn default() -> Self {
        Self { initial_step: 1e-3, rtol: 1e-13, atol: 1e-30 }
    }
}

/// Accepted steps of an integration, in integration order.
#[derive(Debug, Clone, Default)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub y: Vec<Vec<f64>>,
}

const MAX_STEPS: usize = 1_000_000;

// Dormand–Prince 5(4) tableau
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrates `y' = rhs(t, y)` from `t0` to `t1` (either direction) with an
/// adaptive Dormand–Prince 5(4) pair.
///
/// `guard` sees every accepted state and may abort the integration.
pub fn integrate_ode<F, G>(
    rhs: F,
    t0: f64,
    t1: f64,
    y0: &[f64],
    config: &OdeStepperConfig,
    mut guard: G,
) -> Result<Trajectory>
where
    F: Fn(f64, &[f64], &mut [f64]),
    G: FnMut(f64, &[f64]) -> Result<()>,
{
    config.validate()?;
    let dim = y0.len();
    let dir = if t1 >= t0 { 1.0 } else { -1.0 };
    let span = (t1 - t0).abs();
    let mut traj = Trajectory { t: vec![t0], y: vec![y0.to_vec()] };
    if span == 0.0 {
        return Ok(traj);
    }

    let mut t = t0;
    let mut y = y0.to_vec();
    let mut h = config.initial_step.min(span);
    let mut k = vec![vec![0.0; dim]; 7];
    let mut stage = vec![0.0; dim];
    let mut y5 = vec![0.0; dim];
    rhs(t, &y, &mut k[0]);

    for _ in 0..MAX_STEPS {
        let remaining = (t1 - t) * dir;
        if remaining <= 1e-14 * span {
            return Ok(traj);
        }
        h = h.min(remaining);
        let hs = h * dir;
        for s in 1..7 {
            for i in 0..dim {
                let mut acc = y[i];
                for (j, kj) in k.iter().enumerate().take(s) {
                    acc += hs * A[s][j] * kj[i];
                }
                stage[i] = acc;
            }
            let (_, tail) = k.split_at_mut(s);
            rhs(t + C[s] * hs, &stage, &mut tail[0]);
        }
        let mut err = 0.0_f64;
        for i in 0..dim {
            let mut hi = y[i];
            let mut lo = y[i];
            for s in 0..7 {
                hi += hs * B5[s] * k[s][i];
                lo += hs * B4[s] * k[s][i];
            }
            y5[i] = hi;
            let scale = config.atol + config.rtol * y[i].abs().max(hi.abs());
            err = err.max(((hi - lo) / scale).abs());
        }
        if !err.is_finite() {
            h *= 0.25;
        } else if err <= 1.0 {
            t += hs;
            y.copy_from_slice(&y5);
            guard(t, &y)?;
            traj.t.push(t);
            traj.y.push(y.clone());
            // FSAL: last stage is the derivative at the new point
            let last = k[6].clone();
            k[0].copy_from_slice(&last);
            let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            h *= factor;
        } else {
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
        }
        if h < 1e-14 * span.max(t.abs()) {
            return Err(Error::OdeFailure { t, reason: "step size underflow".into() });
        }
    }
    Err(Error::OdeFailure { t, reason: format!("exceeded {MAX_STEPS} steps") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exponential_decay_backward() {
        let cfg = OdeStepperConfig::default();
        let traj = integrate_ode(|_, y, d| d[0] = y[0], 0.0, -5.0, &[1.0], &cfg, |_, _| Ok(())).unwrap();
        assert_abs_diff_eq!(*traj.t.last().unwrap(), -5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(traj.y.last().unwrap()[0], (-5f64).exp(), epsilon = 1e-12);
    }

    #[test]
    fn harmonic_oscillator() {
        let cfg = OdeStepperConfig::new(0.01, 1e-12, 1e-14).unwrap();
        let rhs = |_: f64, y: &[f64], d: &mut [f64]| {
            d[0] = y[1];
            d[1] = -y[0];
        };
        let traj = integrate_ode(rhs, 0.0, 10.0, &[0.0, 1.0], &cfg, |_, _| Ok(())).unwrap();
        let end = traj.y.last().unwrap();
        assert_abs_diff_eq!(end[0], 10f64.sin(), epsilon = 1e-10);
        assert_abs_diff_eq!(end[1], 10f64.cos(), epsilon = 1e-10);
    }

    #[test]
    fn guard_aborts() {
        let cfg = OdeStepperConfig::default();
        let res = integrate_ode(
            |_, y, d| d[0] = y[0],
            0.0,
            10.0,
            &[1.0],
            &cfg,
            |t, y| if y[0] > 100.0 { Err(Error::BlowUp { s: t, q: y[0] }) } else { Ok(()) },
        );
        assert!(matches!(res, Err(Error::BlowUp { .. })));
    }

    #[test]
    fn config_bounds() {
        assert!(OdeStepperConfig::new(0.1, 0.02, 1e-6).is_err());
        assert!(OdeStepperConfig::new(0.0, 1e-6, 1e-6).is_err());
        assert!(OdeStepperConfig::new(0.1, 1e-2, 1e-2).is_ok());
    }
}
