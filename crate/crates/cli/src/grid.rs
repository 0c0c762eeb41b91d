//! `a:b:step` range flags.

use crate::error::{usage, CliError};

fn split3(s: &str) -> Result<[&str; 3], CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, c] => Ok([a.trim(), b.trim(), c.trim()]),
        _ => usage(format!("expected a:b:step, got {s:?}")),
    }
}

/// Inclusive integer range `a, a + step, .. <= b`.
pub fn parse_n_range(s: &str) -> Result<Vec<usize>, CliError> {
    let [a, b, c] = split3(s)?;
    let parse = |v: &str| v.parse::<usize>().map_err(|_| CliError::Usage(format!("bad integer {v:?} in {s:?}")));
    let (a, b, step) = (parse(a)?, parse(b)?, parse(c)?);
    if step == 0 || b < a {
        return usage(format!("empty or degenerate range {s:?}"));
    }
    Ok((a..=b).step_by(step).collect())
}

/// Inclusive real grid `a, a + step, ..`, ending exactly at `b` when the
/// step lands on it within rounding.
pub fn parse_real_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let [a, b, c] = split3(s)?;
    let parse = |v: &str| v.parse::<f64>().map_err(|_| CliError::Usage(format!("bad number {v:?} in {s:?}")));
    let (a, b, step) = (parse(a)?, parse(b)?, parse(c)?);
    if !(step > 0.0) || !(b >= a) || !a.is_finite() || !b.is_finite() {
        return usage(format!("empty or degenerate grid {s:?}"));
    }
    let count = ((b - a) / step + 1e-9).floor() as usize;
    let mut grid: Vec<f64> = (0..=count).map(|k| a + k as f64 * step).collect();
    if (b - grid[count]).abs() <= 1e-9 * step {
        grid[count] = b;
    }
    Ok(grid)
}
