//! Exact and asymptotic volumes of `l_p^n` and Schatten `p`-balls, their
//! critical intersection thresholds, Tracy–Widom distribution functions and
//! the Monte Carlo machinery used to probe intersection volumes at finite
//! dimension.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: log-Gamma, Airy, quadrature and an adaptive ODE stepper.
//! * [`balls`]: exact log-volumes, volume-radius asymptotics and thresholds.
//! * [`sampling`]: seeded samplers (generalized Gaussians, uniform ball
//!   points, Gaussian beta-ensemble eigenvalues).
//! * [`tracywidom`]: Painlevé II / Hastings–McLeod solver and `F_beta`.
//! * [`estimators`]: Monte Carlo intersection volumes, KS distances,
//!   extreme-value checks and the extremal-eigenvalue independence probe.

pub mod balls;
pub mod error;
pub mod estimators;
pub mod sampling;
pub mod specfun;
pub mod tracywidom;

pub use balls::{Beta, Exponent};
pub use error::{Error, Result};
