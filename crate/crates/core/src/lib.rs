//! Steady states and linear stability of a driven optomechanical cavity with
//! radiation-pressure and cross-Kerr coupling.
//!
//! The library solves the mean-field fixed-point equations of a coherently
//! driven cavity coupled to a mechanical resonator, classifies each
//! equilibrium through the Routh-Hurwitz criterion with an eigenvalue oracle,
//! traces the bistable and parametrically unstable branches of the stability
//! diagram, and cross-checks every closed-form endpoint approximation against
//! the numerics.
//!
//! All internal computation uses scaled variables: frequencies in units of the
//! mechanical frequency, the cavity occupation as `n = g0^2 |alpha|^2 /
//! omega_m^2`, the drive in units of `omega_m / g0` and the cross-Kerr
//! strength in units of `g0^2 / omega_m`. In these variables the results are
//! independent of `g0`, which only enters when converting raw amplitudes at
//! the API boundary.
//!
//! The numeric kernels ([`numerics`]) are generic over the scalar type via
//! [`Real`]; `f64` aliases for the main types are exported at the crate root.

pub mod branches;
pub mod dynamics;
mod error;
mod float;
pub mod linstab;
pub mod model;
pub mod numerics;

pub use error::{Error, Result};
pub use float::{Cplx, Real};

/// Complex double, the scalar used by the CLI and most tests.
pub type C64 = num_complex::Complex<f64>;

pub type Params64 = model::SystemParams<f64>;
pub type Drive64 = model::DriveSpec<f64>;
pub type SteadyState64 = model::SteadyState<f64>;
pub type Poly64 = numerics::Polynomial<f64>;
pub type Verdict64 = linstab::StabilityVerdict<f64>;
pub type Diagram64 = branches::StabilityDiagram<f64>;
pub type Endpoints64 = branches::Endpoints<f64>;
pub type Trajectory64 = dynamics::Trajectory<f64>;
