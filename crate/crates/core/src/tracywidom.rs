//! Tracy–Widom distribution functions `F_1`, `F_2`, `F_4`.
//!
//! The Hastings–McLeod solution of Painlevé II, `q'' = s q + 2 q^3` with
//! `q(s) ~ Ai(s)` as `s → +∞`, is integrated backward from Airy data together
//! with the two integrals the distribution functions need:
//!
//! ```text
//! u(s) = ∫_s^∞ (t - s) q(t)^2 dt      (u'' = q^2)
//! v(s) = ∫_s^∞ q(t) dt                (v' = -q)
//!
//! F_2 = exp(-u)
//! F_1 = exp(-v/2) F_2^{1/2}
//! F_4 = cosh(v/2) F_2^{1/2}
//! ```

use crate::balls::Beta;
use crate::error::{domain, Error, Result};
use crate::specfun::{airy_ai, integrate, integrate_ode, OdeStepperConfig, QuadratureRule, AIRY_DOMAIN};

pub const DEFAULT_S_START: f64 = 8.0;
pub const DEFAULT_S_END: f64 = -10.0;
/// Nodes of the Gauss–Legendre rule used for the tails beyond `s_start`.
pub const DEFAULT_TAIL_NODES: usize = 64;
/// `|q|` above which the backward integration is declared divergent.
pub const BLOW_UP: f64 = 1e3;

/// Hastings–McLeod solution on a descending grid of accepted ODE steps.
#[derive(Debug, Clone)]
pub struct PainleveSolution {
    pub grid: Vec<f64>,
    pub q: Vec<f64>,
    pub qprime: Vec<f64>,
    u: Vec<f64>,
    uprime: Vec<f64>,
    v: Vec<f64>,
}

fn hermite(x0: f64, x1: f64, y0: f64, y1: f64, d0: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * y0
        + (t3 - 2.0 * t2 + t) * h * d0
        + (-2.0 * t3 + 3.0 * t2) * y1
        + (t3 - t2) * h * d1
}

impl PainleveSolution {
    pub fn s_start(&self) -> f64 {
        self.grid[0]
    }

    pub fn s_end(&self) -> f64 {
        self.grid[self.grid.len() - 1]
    }

    fn locate(&self, s: f64) -> Result<usize> {
        if !(s <= self.s_start() && s >= self.s_end()) {
            return domain(format!("s = {s} outside the solution range [{}, {}]", self.s_end(), self.s_start()));
        }
        // grid is descending
        let i = self.grid.partition_point(|&g| g > s);
        Ok(i.clamp(1, self.grid.len() - 1))
    }

    /// `q(s)` by cubic Hermite interpolation between steps.
    pub fn q_at(&self, s: f64) -> Result<f64> {
        let i = self.locate(s)?;
        let g = &self.grid;
        Ok(hermite(g[i - 1], g[i], self.q[i - 1], self.q[i], self.qprime[i - 1], self.qprime[i], s))
    }

    /// `(∫_s^∞ (t - s) q^2 dt, ∫_s^∞ q dt)`.
    pub fn tail_integrals(&self, s: f64) -> Result<(f64, f64)> {
        let i = self.locate(s)?;
        let g = &self.grid;
        let u = hermite(g[i - 1], g[i], self.u[i - 1], self.u[i], self.uprime[i - 1], self.uprime[i], s);
        let v = hermite(g[i - 1], g[i], self.v[i - 1], self.v[i], -self.q[i - 1], -self.q[i], s);
        Ok((u, v))
    }
}

/// Integrates the Hastings–McLeod solution from `s_start` down to `s_end`.
pub fn solve_painleve_ii(s_start: f64, s_end: f64, config: &OdeStepperConfig) -> Result<PainleveSolution> {
    solve_painleve_ii_with(s_start, s_end, config, &QuadratureRule::gauss_legendre(DEFAULT_TAIL_NODES)?)
}

/// As [`solve_painleve_ii`], with an explicit rule for the tail integrals.
///
/// Beyond `s_start` the solution is replaced by `Ai`; the difference is
/// `O(Ai^3)`, below 1e-22 for `s_start >= 6`. Airy mass beyond the end of its
/// tabulated domain is below 1e-20 and is dropped.
pub fn solve_painleve_ii_with(
    s_start: f64,
    s_end: f64,
    config: &OdeStepperConfig,
    tail_rule: &QuadratureRule,
) -> Result<PainleveSolution> {
    if !(s_start >= 6.0 && s_start < AIRY_DOMAIN.1) {
        return domain(format!("s_start must lie in [6, {}), got {s_start}", AIRY_DOMAIN.1));
    }
    if !(s_end <= -2.0) || !s_end.is_finite() {
        return domain(format!("s_end must be finite and at most -2, got {s_end}"));
    }
    let ai = |t: f64| airy_ai(t).map(|(a, _)| a).unwrap_or(f64::NAN);
    let top = AIRY_DOMAIN.1;
    let u0 = integrate(|t| (t - s_start) * ai(t).powi(2), s_start, top, tail_rule)?;
    let du0 = -integrate(|t| ai(t).powi(2), s_start, top, tail_rule)?;
    let v0 = integrate(ai, s_start, top, tail_rule)?;
    let (a, ap) = airy_ai(s_start)?;

    let rhs = |s: f64, y: &[f64], d: &mut [f64]| {
        d[0] = y[1];
        d[1] = s * y[0] + 2.0 * y[0].powi(3);
        d[2] = y[3];
        d[3] = y[0] * y[0];
        d[4] = -y[0];
    };
    let guard = |s: f64, y: &[f64]| {
        if !(y[0].abs() <= BLOW_UP) {
            return Err(Error::BlowUp { s, q: y[0].abs() });
        }
        Ok(())
    };
    let traj = integrate_ode(rhs, s_start, s_end, &[a, ap, u0, du0, v0], config, guard)?;

    let col = |k: usize| traj.y.iter().map(|y| y[k]).collect::<Vec<_>>();
    Ok(PainleveSolution { grid: traj.t.clone(), q: col(0), qprime: col(1), u: col(2), uprime: col(3), v: col(4) })
}

impl Default for PainleveSolution {
    /// The solution on `[-10, 8]` with default tolerances.
    fn default() -> Self {
        solve_painleve_ii(DEFAULT_S_START, DEFAULT_S_END, &OdeStepperConfig::default())
            .expect("default Painlevé II integration succeeds")
    }
}

/// `F_β(x)`.
pub fn tw_cdf(beta: Beta, x: f64, solution: &PainleveSolution) -> Result<f64> {
    let (u, v) = solution.tail_integrals(x)?;
    // in log form so the right tail rounds monotonically towards 1
    let log_f = match beta {
        Beta::Two => -u,
        Beta::One => -0.5 * (u + v),
        Beta::Four => 0.5 * (0.5 * v).sinh().powi(2).ln_1p() - 0.5 * u,
    };
    let f = log_f.exp();
    Ok(f)
}

/// `F_β` tabulated on an ascending grid, interpolated by monotone cubics.
#[derive(Debug, Clone)]
pub struct TWTable {
    pub beta: Beta,
    pub grid: Vec<f64>,
    pub f: Vec<f64>,
    slopes: Vec<f64>,
}

/// Fritsch–Carlson slopes for nondecreasing data.
fn monotone_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n < 2 {
        return vec![0.0; n];
    }
    let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
    let mut m = vec![0.0; n];
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for i in 1..n - 1 {
        m[i] = if delta[i - 1] * delta[i] <= 0.0 { 0.0 } else { 0.5 * (delta[i - 1] + delta[i]) };
    }
    for i in 0..n - 1 {
        if delta[i] == 0.0 {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        let a = m[i] / delta[i];
        let b = m[i + 1] / delta[i];
        let r = a.hypot(b);
        if r > 3.0 {
            m[i] = 3.0 * a / r * delta[i];
            m[i + 1] = 3.0 * b / r * delta[i];
        }
    }
    m
}

impl TWTable {
    /// Builds a table from nodes; fails if the values decrease anywhere.
    pub fn from_nodes(beta: Beta, grid: Vec<f64>, f: Vec<f64>) -> Result<Self> {
        if grid.len() != f.len() {
            return Err(Error::DimensionMismatch(grid.len(), f.len()));
        }
        if grid.len() < 2 || grid.windows(2).any(|w| !(w[1] > w[0])) {
            return domain("table grid must be strictly increasing with at least two nodes");
        }
        if let Some(i) = f.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::Accuracy(format!(
                "F_{beta} decreases between x = {} and x = {} ({} -> {})",
                grid[i],
                grid[i + 1],
                f[i],
                f[i + 1]
            )));
        }
        if f.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Accuracy(format!("F_{beta} left [0, 1]")));
        }
        let slopes = monotone_slopes(&grid, &f);
        Ok(Self { beta, grid, f, slopes })
    }

    pub fn x_min(&self) -> f64 {
        self.grid[0]
    }

    pub fn x_max(&self) -> f64 {
        self.grid[self.grid.len() - 1]
    }

    /// Interpolated CDF; saturates to the edge values outside the grid.
    pub fn cdf(&self, x: f64) -> f64 {
        if x <= self.x_min() {
            return self.f[0];
        }
        if x >= self.x_max() {
            return self.f[self.f.len() - 1];
        }
        let i = self.grid.partition_point(|&g| g <= x).clamp(1, self.grid.len() - 1);
        let (x0, x1) = (self.grid[i - 1], self.grid[i]);
        hermite(x0, x1, self.f[i - 1], self.f[i], self.slopes[i - 1], self.slopes[i], x).clamp(self.f[i - 1], self.f[i])
    }
}

/// Tabulates `F_β` on `x_min, x_min + step, ..` up to `x_max`, solving
/// Painlevé II over a range that covers the grid.
pub fn tw_cdf_table(beta: Beta, x_min: f64, x_max: f64, step: f64) -> Result<TWTable> {
    if !(x_min.is_finite() && x_max > x_min && x_max <= DEFAULT_S_START) {
        return domain(format!("table range [{x_min}, {x_max}] must be increasing and end at or below {DEFAULT_S_START}"));
    }
    let solution = solve_painleve_ii(DEFAULT_S_START, x_min.min(DEFAULT_S_END), &OdeStepperConfig::default())?;
    tw_cdf_table_from(beta, x_min, x_max, step, &solution)
}

/// As [`tw_cdf_table`] with a precomputed solution.
pub fn tw_cdf_table_from(beta: Beta, x_min: f64, x_max: f64, step: f64, solution: &PainleveSolution) -> Result<TWTable> {
    let grid = table_grid(x_min, x_max, step)?;
    let f = grid.iter().map(|&x| tw_cdf(beta, x, solution)).collect::<Result<Vec<_>>>()?;
    TWTable::from_nodes(beta, grid, f)
}

/// `x_min + k step` for `k = 0, 1, ..`, with `x_max` appended if the step
/// does not land on it.
pub fn table_grid(x_min: f64, x_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite()) {
        return domain(format!("step must be positive, got {step}"));
    }
    if !(x_max > x_min) {
        return domain(format!("empty range [{x_min}, {x_max}]"));
    }
    let count = ((x_max - x_min) / step + 1e-9).floor() as usize;
    let mut grid: Vec<f64> = (0..=count).map(|k| x_min + k as f64 * step).collect();
    if x_max - grid[count] > 1e-9 * step {
        grid.push(x_max);
    } else {
        grid[count] = x_max;
    }
    Ok(grid)
}
