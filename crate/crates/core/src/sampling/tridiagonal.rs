use crate::error::{domain, Error, Result};

/// QL iterations allowed per eigenvalue before giving up.
const MAX_ITER: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and sub-diagonal, sorted ascending.
///
/// Implicit-shift QL with Wilkinson shifts; eigenvectors are not accumulated.
pub fn symmetric_tridiagonal_eigenvalues(diagonal: &[f64], subdiagonal: &[f64]) -> Result<Vec<f64>> {
    let n = diagonal.len();
    if n == 0 {
        return domain("empty matrix");
    }
    if subdiagonal.len() + 1 != n {
        return Err(Error::DimensionMismatch(subdiagonal.len(), n - 1));
    }
    if diagonal.iter().chain(subdiagonal).any(|v| !v.is_finite()) {
        return domain("non-finite matrix entry");
    }
    ql_eigenvalues(diagonal, subdiagonal, false)
        .ok_or_else(|| Error::Accuracy(format!("QL did not converge within {MAX_ITER} iterations per eigenvalue")))
}

/// `sqrt(a^2 + b^2)`; the libm `hypot` dominates the sweep otherwise.
#[inline]
fn pythag(a: f64, b: f64) -> f64 {
    let r = (a * a + b * b).sqrt();
    if r.is_finite() && r > f64::MIN_POSITIVE {
        r
    } else {
        a.hypot(b)
    }
}

/// Core QL sweep. With `perturbed` set, every tenth iteration on a block uses
/// an exceptional shift to break cycles.
pub(crate) fn ql_eigenvalues(diagonal: &[f64], subdiagonal: &[f64], perturbed: bool) -> Option<Vec<f64>> {
    let n = diagonal.len();
    let mut d = diagonal.to_vec();
    let mut e = subdiagonal.to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_ITER {
                return None;
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = pythag(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            if perturbed && iter % 10 == 0 {
                g += 1e-3 * e[l].abs() * (iter as f64).sqrt();
            }
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = pythag(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    if d.iter().any(|v| !v.is_finite()) {
        return None;
    }
    d.sort_by(f64::total_cmp);
    Some(d)
}
