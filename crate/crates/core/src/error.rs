use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrand returned {value} at node {index} (x = {x})")]
    NonFiniteIntegrand { index: usize, x: f64, value: f64 },

    #[error("ODE stepper failed at t = {t}: {reason}")]
    OdeFailure { t: f64, reason: String },

    /// The Painlevé II integration left the Hastings–McLeod branch.
    #[error("Painlevé II solution diverged at s = {s} (|q| = {q}); tighten the tolerances")]
    BlowUp { s: f64, q: f64 },

    #[error("tridiagonal eigensolver did not converge (seed {seed}, stream {stream})")]
    NoConvergence { seed: u64, stream: u64 },

    #[error("numerical accuracy: {0}")]
    Accuracy(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no bracket for the threshold in [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
