use rand::Rng;

use super::{par_samples, MCEstimate};
use crate::balls::{BallFamily, BallSpec, Beta, Exponent};
use crate::error::{domain, Error, Result};
use crate::sampling::{beta_hermite_eigenvalues, PolarDraw, RandomStream};

/// Search interval for [`empirical_threshold`].
pub const THRESHOLD_BRACKET: (f64, f64) = (1e-3, 1e3);
/// Bisection stops once the bracket is narrower than this.
pub const THRESHOLD_TOL: f64 = 1e-3;

/// How a nominal dilation `t` maps to the factor applied to `D_Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dilation {
    Plain,
    /// `t (ln n)^{1/p}`, `p` the exponent of the sampled ball.
    LogN,
}

impl Dilation {
    pub fn factor(self, p: Exponent, n: usize) -> f64 {
        match self {
            Dilation::Plain => 1.0,
            Dilation::LogN => (n as f64).ln().powf(p.recip()),
        }
    }
}

fn check_pair(x: &BallSpec, y: &BallSpec) -> Result<()> {
    match (x, y) {
        (BallSpec::Lp(a), BallSpec::Lp(b)) if a.n != b.n => Err(Error::DimensionMismatch(a.n, b.n)),
        (BallSpec::Lp(_), BallSpec::Lp(_)) => Ok(()),
        (BallSpec::Schatten(a), BallSpec::Schatten(b)) => {
            if a.n != b.n || a.beta != b.beta {
                return Err(Error::DimensionMismatch(a.dimension() as usize, b.dimension() as usize));
            }
            if a.p != Exponent::Finite(2.0) {
                return Err(Error::Unsupported(format!("uniform sampling of the Schatten-{} ball", a.p)));
            }
            if !matches!(b.p, Exponent::Infinite) && b.p != Exponent::Finite(2.0) {
                return Err(Error::Unsupported(format!("exact volume of the Schatten-{} ball", b.p)));
            }
            Ok(())
        }
        _ => Err(Error::Unsupported("intersection of an l_p ball with a Schatten ball".into())),
    }
}

/// `||Z||_Y` for one uniform point `Z` of `B_X`.
fn statistic(x: &BallSpec, y: &BallSpec, stream: &RandomStream) -> Result<f64> {
    let mut rng = stream.rng();
    match (x, y) {
        (BallSpec::Lp(a), BallSpec::Lp(b)) => Ok(PolarDraw::draw(a.p, a.n, &mut rng)?.norm(b.p)),
        (BallSpec::Schatten(a), BallSpec::Schatten(b)) => schatten_statistic(a.beta, a.n, b.p, &mut rng)
            .ok_or(Error::NoConvergence { seed: stream.seed(), stream: stream.index() }),
        _ => unreachable!("checked by check_pair"),
    }
}

/// `U^{1/d} ||X||_q / ||X||_2` for a β-Hermite draw `X`, `q ∈ {2, ∞}`.
fn schatten_statistic<R: Rng>(beta: Beta, n: usize, q: Exponent, rng: &mut R) -> Option<f64> {
    let d = crate::balls::schatten_dimension(beta, n) as f64;
    loop {
        let values = beta_hermite_eigenvalues(beta, n, rng)?;
        let u: f64 = rng.random();
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            let top = match q {
                Exponent::Infinite => values[0].abs().max(values[values.len() - 1].abs()),
                _ => norm,
            };
            return Some(u.powf(1.0 / d) * (top / norm));
        }
    }
}

/// Per-sample values of `||Z||_Y` together with the volume-radius ratio
/// `vol(B_X)^{1/d} / vol(B_Y)^{1/d}`.
///
/// `vol(D_X ∩ t D_Y)` is the fraction of samples with `stat <= t * ratio`.
pub fn intersection_statistics(
    x: &BallSpec,
    y: &BallSpec,
    count: usize,
    stream: &RandomStream,
) -> Result<(Vec<f64>, f64)> {
    check_pair(x, y)?;
    if count == 0 {
        return domain("sample count must be positive");
    }
    let log_ratio = x.log_volume()?.log_radius_ratio(&y.log_volume()?, x.dimension())?;
    let stats = par_samples(count, stream, |s| statistic(x, y, s))?;
    Ok((stats, log_ratio.exp()))
}

fn estimate_at(stats: &[f64], ratio: f64, t: f64, seed: u64) -> Result<MCEstimate> {
    let bound = t * ratio;
    let hits = stats.iter().filter(|&&s| s <= bound).count();
    MCEstimate::from_counts(hits as u64, stats.len() as u64, seed)
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("dilation must be positive and finite, got {t}"));
    }
    Ok(())
}

/// Monte Carlo estimate of `vol(D_X ∩ t D_Y)`, `D` the volume-normalised balls.
pub fn intersection_volume_mc(
    x: &BallSpec,
    y: &BallSpec,
    t: f64,
    count: usize,
    stream: &RandomStream,
) -> Result<MCEstimate> {
    check_t(t)?;
    let (stats, ratio) = intersection_statistics(x, y, count, stream)?;
    estimate_at(&stats, ratio, t, stream.seed())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    pub t: f64,
    /// The dilation actually applied to `D_Y`.
    pub effective_t: f64,
    pub estimate: MCEstimate,
}

/// Intersection volumes over a grid of dimensions and dilations.
///
/// One sample set per `n` (stream `stream.split(n)`) is shared by every `t`,
/// so each row is exactly nondecreasing in `t`.
pub fn scan(
    x: BallFamily,
    y: BallFamily,
    n_list: &[usize],
    t_grid: &[f64],
    count: usize,
    stream: &RandomStream,
    dilation: Dilation,
) -> Result<Vec<ScanRow>> {
    if n_list.is_empty() || t_grid.is_empty() {
        return domain("scan grids must be nonempty");
    }
    for &t in t_grid {
        check_t(t)?;
    }
    let mut rows = Vec::with_capacity(n_list.len() * t_grid.len());
    for &n in n_list {
        let (xs, ys) = (x.at(n), y.at(n));
        let (stats, ratio) = intersection_statistics(&xs, &ys, count, &stream.split(n as u64))?;
        let factor = dilation.factor(xs.p(), n);
        for &t in t_grid {
            let effective_t = t * factor;
            let estimate = estimate_at(&stats, ratio, effective_t, stream.seed())?;
            rows.push(ScanRow { n, t, effective_t, estimate });
        }
    }
    Ok(rows)
}

/// Critical-window scan: `l_p` against the cube with the `(ln n)^{1/p}`
/// dilation when `beta` is `None`, otherwise Schatten-`p` against
/// Schatten-∞ at plain dilation.
pub fn critical_scan(
    p: Exponent,
    beta: Option<Beta>,
    n_list: &[usize],
    t_grid: &[f64],
    count: usize,
    stream: &RandomStream,
) -> Result<Vec<ScanRow>> {
    match beta {
        None => scan(BallFamily::Lp(p), BallFamily::Lp(Exponent::Infinite), n_list, t_grid, count, stream, Dilation::LogN),
        Some(b) => scan(
            BallFamily::Schatten(p, b),
            BallFamily::Schatten(Exponent::Infinite, b),
            n_list,
            t_grid,
            count,
            stream,
            Dilation::Plain,
        ),
    }
}

/// Dilation at which the estimated intersection volume crosses 1/2, by
/// bisection on common random numbers.
pub fn empirical_threshold(
    x: BallFamily,
    y: BallFamily,
    n: usize,
    count: usize,
    stream: &RandomStream,
) -> Result<f64> {
    let (stats, ratio) = intersection_statistics(&x.at(n), &y.at(n), count, stream)?;
    let value = |t: f64| estimate_at(&stats, ratio, t, stream.seed()).map(|e| e.value);
    let (mut lo, mut hi) = THRESHOLD_BRACKET;
    if !(value(lo)? < 0.5 && value(hi)? >= 0.5) {
        return Err(Error::NoBracket { lo, hi });
    }
    while hi - lo > THRESHOLD_TOL {
        let mid = 0.5 * (lo + hi);
        if value(mid)? < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
