use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// Node count used when a caller does not pick one.
pub const DEFAULT_NODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureScheme {
    CompositeSimpson,
    GaussLegendre,
}

/// A fixed-node quadrature rule on a reference interval.
///
/// Gauss–Legendre nodes and weights are computed once at construction, so a
/// rule can be reused across many integrals.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    scheme: QuadratureScheme,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn new(scheme: QuadratureScheme, node_count: usize) -> Result<Self> {
        match scheme {
            QuadratureScheme::CompositeSimpson => Self::composite_simpson(node_count),
            QuadratureScheme::GaussLegendre => Self::gauss_legendre(node_count),
        }
    }

    /// Composite Simpson rule on `[0, 1]`; `node_count` must be odd.
    pub fn composite_simpson(node_count: usize) -> Result<Self> {
        if node_count < 3 || node_count % 2 == 0 {
            return domain(format!("Simpson rule needs an odd node count >= 3, got {node_count}"));
        }
        let panels = (node_count - 1) as f64;
        let h = 1.0 / panels;
        let nodes = (0..node_count).map(|i| i as f64 * h).collect();
        let weights = (0..node_count)
            .map(|i| {
                let w = if i == 0 || i == node_count - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                w * h / 3.0
            })
            .collect();
        Ok(Self { scheme: QuadratureScheme::CompositeSimpson, nodes, weights })
    }

    /// Gauss–Legendre rule mapped to `[0, 1]`.
    pub fn gauss_legendre(node_count: usize) -> Result<Self> {
        if node_count < 3 {
            return domain(format!("Gauss-Legendre rule needs >= 3 nodes, got {node_count}"));
        }
        let n = node_count;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..(n + 1) / 2 {
            // Tricomi initial guess, then Newton on P_n
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // map [-1, 1] -> [0, 1]
            nodes[i] = 0.5 * (1.0 - x);
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        Ok(Self { scheme: QuadratureScheme::GaussLegendre, nodes, weights })
    }

    pub fn scheme(&self) -> QuadratureScheme {
        self.scheme
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self::gauss_legendre(DEFAULT_NODES).expect("default node count is valid")
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over `[a, b]` with the given rule.
///
/// A non-finite integrand value aborts the sum and reports the node.
pub fn integrate<F>(f: F, a: f64, b: f64, rule: &QuadratureRule) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return domain(format!("integration bounds must satisfy a <= b, got [{a}, {b}]"));
    }
    let len = b - a;
    let mut sum = 0.0;
    for (index, (&t, &w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let x = a + len * t;
        let value = f(x);
        if !value.is_finite() {
            return Err(Error::NonFiniteIntegrand { index, x, value });
        }
        sum += w * value;
    }
    Ok(sum * len)
}
