//! Special functions and one-dimensional numerical kernels.
//!
//! Everything here is pure and stateless.

mod airy;
mod gamma;
mod ode;
mod quad;

pub use airy::{airy_ai, AIRY_DOMAIN};
pub use gamma::log_gamma;
pub use ode::{integrate_ode, OdeStepperConfig, Trajectory};
pub use quad::{integrate, QuadratureRule, QuadratureScheme, DEFAULT_NODES};
