//! Dependency-free numerical kernels: polynomial root finding, quartic
//! eigenvalue extraction, fixed-step integration and bracketed root finding.
//!
//! Everything here is a pure function of its inputs and safe to call from any
//! number of threads.

mod bisect;
mod linsolve;
mod poly;
mod rk4;
mod roots;

pub use bisect::{bisect, golden_min};
pub use linsolve::solve4;
pub use poly::{poly_add, poly_mul, poly_scale, poly_shift, Polynomial, MAX_DEGREE};
pub use rk4::{integrate_fixed_step, rk4_step, IntegrationResult, State4, OVERFLOW_GUARD};
pub use roots::{poly_roots, quartic_roots, real_nonneg_roots, RootSet};

/// Default relative residual tolerance for polynomial roots.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

/// Default relative threshold below which an imaginary part counts as zero.
pub const REALNESS_TOL: f64 = 1e-8;

/// Default bisection width, relative to the bracket scale.
pub const BISECT_TOL: f64 = 1e-12;
