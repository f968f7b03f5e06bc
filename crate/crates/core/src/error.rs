use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type for the whole crate. Numeric payloads are stored as `f64`
/// snapshots so the type stays independent of the scalar parameter.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial has degree zero after trimming")]
    DegreeZero,

    #[error("polynomial degree {0} exceeds the supported maximum")]
    DegreeTooHigh(usize),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("bracket search failed: {0}")]
    BracketSearchFailed(String),

    #[error("root finder did not converge (best residual {residual:e})")]
    RootsNotConverged { residual: f64 },

    #[error("{count} physical steady states at drive {drive} (expected 1-3); roots: {roots:?}")]
    RootCountAnomaly { count: usize, drive: f64, roots: Vec<f64> },

    #[error("steady-state residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("steady state is stale: residual {0:e}")]
    StaleSteadyState(f64),

    #[error("characteristic polynomial has imaginary residue {imag:e} (scale {scale:e})")]
    ComplexResidue { imag: f64, scale: f64 },

    #[error("closed-form coefficient mismatch: {lhs:e} vs {rhs:e}")]
    ClosedFormMismatch { lhs: f64, rhs: f64 },

    #[error("stability oracles disagree: {0}")]
    OracleDisagreement(String),

    #[error("singular linear system")]
    SingularSystem,
}
