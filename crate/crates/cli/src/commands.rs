use critballs::balls::{
    e_n_lp, log_volume_expansion_residual, lp_volume_constant, threshold_lp_inf, threshold_schatten,
    volume_radius_schatten_asymptotic, BallFamily,
};
use critballs::estimators::{gumbel_cdf, gumbel_check, independence_probe, norm_clt_check, scan, Dilation};
use critballs::sampling::RandomStream;
use critballs::specfun::OdeStepperConfig;
use critballs::tracywidom::{solve_painleve_ii, tw_cdf, tw_cdf_table_from, DEFAULT_S_END, DEFAULT_S_START};
use critballs::{Beta, Exponent};

use crate::args::{
    CltArgs, Family, GumbelArgs, IndependenceArgs, IntersectArgs, ThresholdArgs, TwTableArgs, VolumeArgs,
};
use crate::error::{usage, CliError};
use crate::grid::{parse_n_range, parse_real_grid};
use crate::output::{Cell, Table};

type Res<T> = Result<T, CliError>;

fn exponent_cell(p: Exponent) -> Cell {
    match p {
        Exponent::Finite(v) => Cell::Real(v),
        Exponent::Infinite => Cell::from("inf"),
    }
}

fn beta_cell(beta: Option<Beta>) -> Cell {
    beta.map_or(Cell::Null, |b| Cell::Int(b.as_u32().into()))
}

fn dims(n: Option<usize>, n_range: &Option<String>) -> Res<Vec<usize>> {
    let ns = match (n, n_range) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => parse_n_range(r)?,
        _ => return usage("give exactly one of --n and --n-range"),
    };
    if ns.contains(&0) {
        return usage("dimensions must be at least 1");
    }
    Ok(ns)
}

/// Resolves `--family`/`--p`/`--beta` into a ball family, rejecting
/// combinations without an exact volume formula.
fn family(family: Family, p: Exponent, beta: Option<Beta>) -> Res<BallFamily> {
    match (family, beta) {
        (Family::Lp, None) => Ok(BallFamily::Lp(p)),
        (Family::Lp, Some(_)) => usage("--beta applies to the schatten family only"),
        (Family::Schatten, None) => usage("the schatten family needs --beta 1, 2 or 4"),
        (Family::Schatten, Some(b)) => {
            if p != Exponent::Finite(2.0) && p != Exponent::Infinite {
                return usage(format!("exact Schatten volumes exist for p = 2 and p = inf only, got p = {p}"));
            }
            Ok(BallFamily::Schatten(p, b))
        }
    }
}

/// Columns: `n, dimension, log_volume, volume_radius, asymptotic_radius,
/// expansion_residual, formula`.
///
/// For `l_p` the asymptotic radius is `c_p n^{-1/p}` and the residual the
/// relative deviation `e_n`; for Schatten balls they are the
/// volume-radius asymptotic and the log-volume expansion residual.
pub fn volume(a: &VolumeArgs) -> Res<Table> {
    let fam = family(a.family, a.p, a.beta)?;
    let mut t = Table::new(vec![
        "n",
        "dimension",
        "log_volume",
        "volume_radius",
        "asymptotic_radius",
        "expansion_residual",
        "formula",
    ]);
    for n in dims(a.n, &a.n_range)? {
        let spec = fam.at(n);
        let lv = spec.log_volume()?;
        let d = spec.dimension();
        let (asym, residual) = match fam {
            BallFamily::Lp(Exponent::Infinite) => (Some(2.0), Some(0.0)),
            BallFamily::Lp(p @ Exponent::Finite(pf)) => (
                Some(lp_volume_constant(pf)? * (n as f64).powf(-1.0 / pf)),
                if n >= 2 { Some(e_n_lp(p, n)?) } else { None },
            ),
            BallFamily::Schatten(p, b) => (
                Some(volume_radius_schatten_asymptotic(p, b, n)?),
                if n >= 2 { Some(log_volume_expansion_residual(p, b, n)?) } else { None },
            ),
        };
        t.push(vec![
            n.into(),
            d.into(),
            lv.value.into(),
            (lv.value / d as f64).exp().into(),
            asym.into(),
            residual.into(),
            lv.formula.as_str().into(),
        ]);
    }
    Ok(t)
}

/// Columns: `family, p, q, beta, threshold, status, formula`.
pub fn threshold(a: &ThresholdArgs) -> Res<Table> {
    let mut t = Table::new(vec!["family", "p", "q", "beta", "threshold", "status", "formula"]);
    let (value, status, formula) = match a.family {
        Family::Lp => {
            if a.beta.is_some() {
                return usage("--beta applies to the schatten family only");
            }
            if !a.q.is_infinite() {
                return usage("l_p thresholds are available against q = inf only; use `intersect` to locate others");
            }
            (threshold_lp_inf(a.p)?, "proven", "exp(-1/p)/Gamma(1+1/p)")
        }
        Family::Schatten => {
            let Some(beta) = a.beta else {
                return usage("the schatten family needs --beta 1, 2 or 4");
            };
            if a.p.is_infinite() {
                return usage("the Schatten threshold needs a finite p");
            }
            let th = threshold_schatten(a.p, a.q, beta)?;
            let formula = if a.q.is_infinite() { "exp(1/(2p))" } else { "exp((1/p-1/q)/2)*(2p/(p+q))^(1/q)" };
            (th.value, th.status.as_str(), formula)
        }
    };
    let fam = match a.family {
        Family::Lp => "lp",
        Family::Schatten => "schatten",
    };
    t.push(vec![
        fam.into(),
        exponent_cell(a.p),
        exponent_cell(a.q),
        beta_cell(a.beta),
        value.into(),
        status.into(),
        formula.into(),
    ]);
    Ok(t)
}

/// Columns: `n, t, effective_t, value, stderr, ci_low, ci_high, successes,
/// samples, seed`.
pub fn intersect(a: &IntersectArgs, seed: u64) -> Res<Table> {
    if a.samples < 100 {
        return usage(format!("--samples must be at least 100, got {}", a.samples));
    }
    let x = family(a.family, a.p, a.beta)?;
    let y = family(a.family, a.q.unwrap_or(a.p), a.beta)?;
    if let BallFamily::Schatten(p, _) = x {
        if p != Exponent::Finite(2.0) {
            return usage("the sampled Schatten ball must have p = 2");
        }
    }
    let ts = match (a.t, &a.t_grid) {
        (Some(t), None) => vec![t],
        (None, Some(g)) => parse_real_grid(g)?,
        _ => return usage("give exactly one of --t and --t-grid"),
    };
    if ts.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
        return usage("dilations must be positive");
    }
    let dilation = if a.log_dilate { Dilation::LogN } else { Dilation::Plain };
    let ns = dims(a.n, &a.n_range)?;
    let rows = scan(x, y, &ns, &ts, a.samples, &RandomStream::new(seed, 0), dilation)?;

    let mut t = Table::new(vec![
        "n",
        "t",
        "effective_t",
        "value",
        "stderr",
        "ci_low",
        "ci_high",
        "successes",
        "samples",
        "seed",
    ]);
    for r in rows {
        let (lo, hi) = r.estimate.wilson_interval();
        t.push(vec![
            r.n.into(),
            r.t.into(),
            r.effective_t.into(),
            r.estimate.value.into(),
            r.estimate.stderr.into(),
            lo.into(),
            hi.into(),
            r.estimate.successes.into(),
            r.estimate.count.into(),
            r.estimate.seed.into(),
        ]);
    }
    Ok(t)
}

/// Columns: `x` followed by `F1`, `F2`, `F4` (or the one selected).
pub fn tw_table(a: &TwTableArgs) -> Res<Table> {
    let betas: Vec<Beta> = a.beta.map_or(Beta::ALL.to_vec(), |b| vec![b]);
    let xs = if a.at.is_empty() {
        if !(a.x_max > a.x_min) || !(a.step > 0.0) {
            return usage("need --x-min < --x-max and a positive --step");
        }
        parse_real_grid(&format!("{}:{}:{}", a.x_min, a.x_max, a.step))?
    } else {
        a.at.clone()
    };
    let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(hi <= DEFAULT_S_START) || !lo.is_finite() {
        return usage(format!("evaluation points must be finite and at most {DEFAULT_S_START}"));
    }
    let solution = solve_painleve_ii(DEFAULT_S_START, lo.min(DEFAULT_S_END), &OdeStepperConfig::default())?;

    let columns = std::iter::once("x")
        .chain(betas.iter().map(|b| match b {
            Beta::One => "F1",
            Beta::Two => "F2",
            Beta::Four => "F4",
        }))
        .collect();
    let mut t = Table::new(columns);
    let values: Vec<Vec<f64>> = if a.at.is_empty() {
        betas
            .iter()
            .map(|&b| tw_cdf_table_from(b, a.x_min, a.x_max, a.step, &solution).map(|tab| tab.f))
            .collect::<Result<_, _>>()?
    } else {
        betas
            .iter()
            .map(|&b| xs.iter().map(|&x| tw_cdf(b, x, &solution)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?
    };
    for (i, &x) in xs.iter().enumerate() {
        let mut row = vec![Cell::Real(x)];
        row.extend(values.iter().map(|v| Cell::Real(v[i])));
        t.push(row);
    }
    Ok(t)
}

/// Columns: `x, y, joint, product, gap, max_abs_gap, gap_stderr, beta, n,
/// samples`; the last five repeat on every row.
pub fn independence(a: &IndependenceArgs, seed: u64) -> Res<Table> {
    if a.n == 0 || a.samples < 2 {
        return usage("need --n >= 1 and --samples >= 2");
    }
    let xs = parse_real_grid(&a.x_grid)?;
    let ys = parse_real_grid(&a.y_grid)?;
    if xs.iter().chain(&ys).any(|v| !(-5.0..=3.0).contains(v)) {
        return usage("grid points must lie in [-5, 3]");
    }
    let grid: Vec<(f64, f64)> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect();
    let r = independence_probe(a.beta, a.n, a.samples, &grid, &RandomStream::new(seed, 0))?;
    let mut t = Table::new(vec![
        "x",
        "y",
        "joint",
        "product",
        "gap",
        "max_abs_gap",
        "gap_stderr",
        "beta",
        "n",
        "samples",
    ]);
    for (k, &(x, y)) in r.grid.iter().enumerate() {
        t.push(vec![
            x.into(),
            y.into(),
            r.joint[k].into(),
            r.product[k].into(),
            (r.joint[k] - r.product[k]).into(),
            r.max_abs_gap.into(),
            r.gap_stderr.into(),
            beta_cell(Some(a.beta)),
            a.n.into(),
            a.samples.into(),
        ]);
    }
    Ok(t)
}

/// Columns: `p, n, samples, ks, ecdf_at_zero, gumbel_at_zero`.
pub fn gumbel(a: &GumbelArgs, seed: u64) -> Res<Table> {
    if !(a.p >= 1.0) || a.samples == 0 {
        return usage("need --p >= 1 and --samples >= 1");
    }
    let g = gumbel_check(a.p, a.n, a.samples, &RandomStream::new(seed, 0))?;
    let mut t = Table::new(vec!["p", "n", "samples", "ks", "ecdf_at_zero", "gumbel_at_zero"]);
    t.push(vec![
        a.p.into(),
        a.n.into(),
        a.samples.into(),
        g.ks.into(),
        g.ecdf.eval(0.0).into(),
        gumbel_cdf(0.0).into(),
    ]);
    Ok(t)
}

/// Columns: `beta, n, samples, mean, stderr, variance, target_mean, z,
/// moment_mean`. `target_mean` is `(1/2 - 1/β) 3/4`; `moment_mean` is the
/// value `1/(2β) - 1/4` implied by `E Σ X_i^2 = d_n / 2`.
pub fn clt(a: &CltArgs, seed: u64) -> Res<Table> {
    if a.n < 10 || a.samples < 2 {
        return usage("need --n >= 10 and --samples >= 2");
    }
    let c = norm_clt_check(a.beta, a.n, a.samples, &RandomStream::new(seed, 0))?;
    let b = a.beta.value();
    let target = (0.5 - 1.0 / b) * 0.75;
    let mut t = Table::new(vec!["beta", "n", "samples", "mean", "stderr", "variance", "target_mean", "z", "moment_mean"]);
    t.push(vec![
        beta_cell(Some(a.beta)),
        a.n.into(),
        a.samples.into(),
        c.mean.into(),
        c.stderr.into(),
        c.variance.into(),
        target.into(),
        ((c.mean - target) / c.stderr).into(),
        (0.5 / b - 0.25).into(),
    ]);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_rules() {
        let two = Exponent::Finite(2.0);
        assert!(family(Family::Lp, two, None).is_ok());
        assert!(matches!(family(Family::Lp, two, Some(Beta::One)), Err(CliError::Usage(_))));
        assert!(matches!(family(Family::Schatten, two, None), Err(CliError::Usage(_))));
        assert!(matches!(family(Family::Schatten, Exponent::Finite(3.0), Some(Beta::Two)), Err(CliError::Usage(_))));
        assert!(family(Family::Schatten, Exponent::Infinite, Some(Beta::Two)).is_ok());
    }

    #[test]
    fn dims_rules() {
        assert_eq!(dims(Some(3), &None).unwrap(), vec![3]);
        assert!(dims(Some(0), &None).is_err());
        assert_eq!(dims(None, &Some("1:3:1".into())).unwrap(), vec![1, 2, 3]);
    }
}
