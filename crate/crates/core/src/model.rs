//! Physical parameter set, unit conventions and the steady-state solver.
//!
//! All computation runs in scaled variables: frequencies in units of
//! `omega_m`, occupation `n = g0^2 |alpha|^2 / omega_m^2`, drive amplitude in
//! units of `omega_m / g0`, cross-Kerr strength in units of `g0^2 / omega_m`.
//! Raw amplitudes are reconstructed only at the API boundary.

use crate::numerics::{
    self, poly_add, poly_mul, poly_scale, poly_shift, real_nonneg_roots, Polynomial,
};
use crate::{Cplx, Error, Real, Result};

/// Sign convention for the mechanical drive term of the equations of motion.
///
/// The two forms differ in whether the static radiation-pressure force enters
/// the mechanical equation with the imaginary unit. `Standard` reproduces the
/// textbook linearized theory and the closed-form bistability endpoints;
/// `Printed` keeps the literal alternative for fidelity experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Standard,
    Printed,
}

/// Treatment of the mechanical susceptibility in the steady-state equations.
///
/// `Quintic` drops the mechanical linewidth from the static susceptibility
/// denominator, which closes the self-consistency equation at degree five;
/// `Full` keeps it. Fluctuation damping is unaffected by this switch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Susceptibility {
    #[default]
    Quintic,
    Full,
}

/// Physical constants plus modeling-convention switches. All frequencies are
/// stored in units of `omega_m`; `gck` is the scaled cross-Kerr strength
/// `g_ck * omega_m / g0^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams<F> {
    /// Mechanical frequency, the frequency unit (1 in scaled mode).
    pub omega_m: F,
    /// Cavity linewidth, units of `omega_m`.
    pub kappa: F,
    /// Mechanical linewidth, units of `omega_m`.
    pub gamma: F,
    /// Single-photon radiation-pressure coupling, units of `omega_m`.
    pub g0: F,
    /// Cross-Kerr coupling in units of `g0^2 / omega_m`.
    pub gck: F,
    /// Pump detuning `omega_p - omega_c`, units of `omega_m`.
    pub delta0: F,
    pub convention: Convention,
    pub susceptibility: Susceptibility,
}

impl<F: Real> Default for SystemParams<F> {
    /// Red-detuned reference point used throughout the test and preset data:
    /// `delta0 = -1`, `kappa = 0.6`, `gamma = 0.12`, `g0 = 1e-5`, no
    /// cross-Kerr term.
    fn default() -> Self {
        Self {
            omega_m: F::one(),
            kappa: F::of(0.6),
            gamma: F::of(0.12),
            g0: F::of(1e-5),
            gck: F::zero(),
            delta0: F::of(-1.0),
            convention: Convention::Standard,
            susceptibility: Susceptibility::Quintic,
        }
    }
}

impl<F: Real> SystemParams<F> {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.omega_m > F::zero(), "omega_m must be positive"),
            (self.kappa > F::zero(), "kappa must be positive"),
            (self.gamma > F::zero(), "gamma must be positive"),
            (self.g0 > F::zero(), "g0 must be positive"),
            (self.gck >= F::zero(), "gck must be nonnegative"),
        ];
        for (ok, msg) in checks {
            if !ok {
                return Err(Error::InvalidInput(msg.into()));
            }
        }
        let finite = self.omega_m.is_finite()
            && self.kappa.is_finite()
            && self.gamma.is_finite()
            && self.g0.is_finite()
            && self.gck.is_finite()
            && self.delta0.is_finite();
        if !finite {
            return Err(Error::NonFinite("system parameters"));
        }
        Ok(())
    }

    pub fn with_gck(mut self, gck: F) -> Self {
        self.gck = gck;
        self
    }

    pub fn with_delta0(mut self, delta0: F) -> Self {
        self.delta0 = delta0;
        self
    }

    pub fn with_susceptibility(mut self, s: Susceptibility) -> Self {
        self.susceptibility = s;
        self
    }

    pub fn with_convention(mut self, c: Convention) -> Self {
        self.convention = c;
        self
    }

    /// Effective mechanical frequency at scaled occupation `n`, units of
    /// `omega_m`: `1 + gck * n`.
    pub fn omega_e(&self, n: F) -> F {
        F::one() + self.gck * n
    }

    /// Squared modulus of the static mechanical susceptibility denominator.
    fn chi_sq(&self, n: F) -> F {
        let we = self.omega_e(n);
        match self.susceptibility {
            Susceptibility::Quintic => we * we,
            Susceptibility::Full => self.gamma * self.gamma * F::of(0.25) + we * we,
        }
    }

    /// Scaled mechanical amplitude `g0 * beta / omega_m` at occupation `n`.
    pub fn beta_scaled(&self, n: F) -> Cplx<F> {
        let we = self.omega_e(n);
        let chi = match self.susceptibility {
            Susceptibility::Quintic => Cplx::new(F::zero(), we),
            Susceptibility::Full => Cplx::new(self.gamma * F::half(), we),
        };
        let force = match self.convention {
            Convention::Standard => Cplx::new(F::zero(), -n),
            Convention::Printed => Cplx::new(-n, F::zero()),
        };
        force / chi
    }

    /// Effective detuning (steady-state bracket) at scaled occupation `n`:
    /// `delta0 - g0 (beta + beta*) - g_ck |beta|^2` in units of `omega_m`.
    pub fn delta_eff_scaled(&self, n: F) -> F {
        let b = self.beta_scaled(n);
        self.delta0 - F::two() * b.re - self.gck * b.norm_sqr()
    }

    /// d(delta_eff)/dn, used by the Newton polish and the fold detector.
    fn delta_eff_deriv(&self, n: F) -> F {
        let w = self.chi_poly();
        let u = poly_add(&self.force_poly(), &self.kerr_poly());
        let wp = derive(&w);
        let up = derive(&u);
        let wn = eval(&w, n);
        // (u/w)' = (u' w - u w') / w^2
        (eval(&up, n) * wn - eval(&u, n) * eval(&wp, n)) / (wn * wn)
    }

    /// Scaled cavity amplitude `g0 * alpha / omega_m` at occupation `n` for a
    /// scaled drive; the phase follows from the complex cavity denominator
    /// with the input field taken real and positive.
    pub fn alpha_scaled(&self, n: F, drive_scaled: F) -> Cplx<F> {
        let denom = Cplx::new(self.kappa * F::half(), -self.delta_eff_scaled(n));
        Cplx::new(self.kappa.sqrt() * drive_scaled, F::zero()) / denom
    }

    // Coefficient vectors (ascending in n) for the denominator-cleared
    // self-consistency equation.

    /// `W(n)`: susceptibility denominator squared modulus as a polynomial.
    fn chi_poly(&self) -> Vec<F> {
        let g = self.gck;
        let c0 = match self.susceptibility {
            Susceptibility::Quintic => F::one(),
            Susceptibility::Full => F::one() + self.gamma * self.gamma * F::of(0.25),
        };
        vec![c0, F::two() * g, g * g]
    }

    /// Numerator of `-g0 (beta + beta*)` over `W`.
    fn force_poly(&self) -> Vec<F> {
        match (self.convention, self.susceptibility) {
            // -(b + b*) = 2 n omega_e / W
            (Convention::Standard, _) => vec![F::zero(), F::two(), F::two() * self.gck],
            // beta purely imaginary: no static detuning shift
            (Convention::Printed, Susceptibility::Quintic) => vec![F::zero()],
            // -(b + b*) = gamma n / W
            (Convention::Printed, Susceptibility::Full) => vec![F::zero(), self.gamma],
        }
    }

    /// Numerator of `-g_ck |beta|^2` over `W`: `-gck n^2`.
    fn kerr_poly(&self) -> Vec<F> {
        vec![F::zero(), F::zero(), -self.gck]
    }

    /// Numerator of the effective detuning over `W`: `delta0 W + U + V`.
    fn detuning_numerator(&self) -> Vec<F> {
        poly_add(
            &poly_scale(&self.chi_poly(), self.delta0),
            &poly_add(&self.force_poly(), &self.kerr_poly()),
        )
    }
}

fn eval<F: Real>(coeffs: &[F], x: F) -> F {
    let mut acc = F::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derive<F: Real>(coeffs: &[F]) -> Vec<F> {
    if coeffs.len() <= 1 {
        return vec![F::zero()];
    }
    coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * F::of(k as f64)).collect()
}

/// Coherent input-field amplitude; the phase is fixed to zero by convention.
/// `alpha_in` is the scaled amplitude (units `omega_m / g0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DriveSpec<F> {
    pub alpha_in: F,
}

impl<F: Real> DriveSpec<F> {
    pub fn scaled(alpha_in: F) -> Result<Self> {
        if !(alpha_in >= F::zero()) || !alpha_in.is_finite() {
            return Err(Error::InvalidInput("drive amplitude must be finite and >= 0".into()));
        }
        Ok(Self { alpha_in })
    }

    /// Convert a raw input amplitude to scaled units for the given couplings.
    pub fn from_raw(alpha_in_raw: F, params: &SystemParams<F>) -> Result<Self> {
        Self::scaled(alpha_in_raw * params.g0 / params.omega_m.sqrt())
    }
}

/// One equilibrium of the mean-field equations.
#[derive(Clone, Copy, Debug)]
pub struct SteadyState<F> {
    /// Raw cavity amplitude.
    pub alpha: Cplx<F>,
    /// Raw mechanical amplitude.
    pub beta: Cplx<F>,
    /// Raw cavity occupation `|alpha|^2`.
    pub n_a: F,
    /// Scaled occupation `g0^2 n_a / omega_m^2`, the plotted quantity.
    pub n: F,
    /// Worst relative residual of the two fixed-point equations.
    pub residual: F,
    /// Set when this state came out of a near-double root merge.
    pub degenerate: bool,
    /// Scaled amplitudes, the quantities the internal machinery consumes.
    pub alpha_scaled: Cplx<F>,
    pub beta_scaled: Cplx<F>,
}

/// Relative residual tolerance for accepted steady states.
pub const STEADY_RESIDUAL_TOL: f64 = 1e-9;

/// Roots closer than this (in scaled occupation, relative) merge into one
/// degenerate-flagged state; the branch-merger events at critical couplings
/// are exactly such near-double roots and must be detected, not mis-counted.
pub const DEGENERATE_TOL: f64 = 1e-6;

/// Mechanical amplitude for a given raw cavity occupation (closed form of the
/// mechanical fixed-point equation evaluated at `|alpha|^2 = n_a`).
pub fn beta_of_occupation<F: Real>(params: &SystemParams<F>, n_a: F) -> Result<Cplx<F>> {
    params.validate()?;
    if !(n_a >= F::zero()) {
        return Err(Error::InvalidInput("occupation must be nonnegative".into()));
    }
    let n = n_a * params.g0 * params.g0 / (params.omega_m * params.omega_m);
    let scale = params.omega_m / params.g0;
    Ok(params.beta_scaled(n) * Cplx::new(scale, F::zero()))
}

/// Effective detuning `delta0 - g0 (beta + beta*) - g_ck |beta|^2` in units
/// of `omega_m`, with `beta` from [`beta_of_occupation`].
pub fn effective_detuning<F: Real>(params: &SystemParams<F>, n_a: F) -> Result<F> {
    params.validate()?;
    if !(n_a >= F::zero()) {
        return Err(Error::InvalidInput("occupation must be nonnegative".into()));
    }
    let n = n_a * params.g0 * params.g0 / (params.omega_m * params.omega_m);
    Ok(params.delta_eff_scaled(n))
}

/// Denominator-cleared self-consistency polynomial in the scaled occupation
/// `n`, built from `n [ (kappa/2)^2 + delta_eff(n)^2 ] = kappa alpha_in^2`.
///
/// Its nonnegative real roots are the steady-state occupations. The degree is
/// five in general and drops to three at `gck = 0`, where the leading
/// coefficients vanish identically and are trimmed rather than special-cased.
pub fn self_consistency_poly<F: Real>(
    params: &SystemParams<F>,
    drive: &DriveSpec<F>,
) -> Result<Polynomial<F>> {
    params.validate()?;
    let w = params.chi_poly();
    let nnum = params.detuning_numerator();
    let w2 = poly_mul(&w, &w);
    let quarter_k2 = params.kappa * params.kappa * F::of(0.25);
    // n [ kappa^2 W^2 / 4 + N^2 ] - kappa alpha_in^2 W^2
    let bracket = poly_add(&poly_scale(&w2, quarter_k2), &poly_mul(&nnum, &nnum));
    let lhs = poly_shift(&bracket, 1);
    let rhs = poly_scale(&w2, params.kappa * drive.alpha_in * drive.alpha_in);
    let coeffs = poly_add(&lhs, &poly_scale(&rhs, -F::one()));
    Polynomial::new(coeffs)
}

/// Scaled drive amplitude that sustains the scaled occupation `n`; the exact
/// inverse of the steady-state modulus equation.
pub fn drive_for_occupation<F: Real>(params: &SystemParams<F>, n: F) -> Result<F> {
    params.validate()?;
    if !(n >= F::zero()) {
        return Err(Error::InvalidInput("occupation must be nonnegative".into()));
    }
    let d = params.delta_eff_scaled(n);
    let k = params.kappa;
    Ok((n * (k * k * F::of(0.25) + d * d) / k).sqrt())
}

/// Residual of the self-consistency equation at occupation `n`.
fn balance<F: Real>(params: &SystemParams<F>, drive: F, n: F) -> F {
    let d = params.delta_eff_scaled(n);
    let k = params.kappa;
    n * (k * k * F::of(0.25) + d * d) - k * drive * drive
}

fn balance_deriv<F: Real>(params: &SystemParams<F>, n: F) -> F {
    let d = params.delta_eff_scaled(n);
    let k = params.kappa;
    k * k * F::of(0.25) + d * d + F::two() * n * d * params.delta_eff_deriv(n)
}

/// Newton-polish a polynomial root on the exact modulus equation. Steps are
/// clamped so near-fold roots (vanishing derivative) stay put.
fn polish_root<F: Real>(params: &SystemParams<F>, drive: F, mut n: F) -> F {
    let mut best = n;
    let mut best_f = balance(params, drive, n).abs();
    for _ in 0..4 {
        let f = balance(params, drive, n);
        let fp = balance_deriv(params, n);
        if fp.abs() < F::min_positive_value() {
            break;
        }
        let mut step = f / fp;
        let cap = n.abs().max(F::one()) * F::of(0.1);
        if step.abs() > cap {
            step = cap * step.signum();
        }
        n = (n - step).max(F::zero());
        let fa = balance(params, drive, n).abs();
        if fa < best_f {
            best_f = fa;
            best = n;
        }
    }
    best
}

/// Assemble the full state record at a known occupation and drive, including
/// residuals of both fixed-point equations evaluated at the stored
/// amplitudes.
pub fn state_at_occupation<F: Real>(
    params: &SystemParams<F>,
    n: F,
    drive_scaled: F,
) -> Result<SteadyState<F>> {
    params.validate()?;
    if !(n >= F::zero()) {
        return Err(Error::InvalidInput("occupation must be nonnegative".into()));
    }
    let a = params.alpha_scaled(n, drive_scaled);
    let b = params.beta_scaled(n);
    let m = a.norm_sqr();

    // Cavity equation residual at the stored amplitudes, with the mechanical
    // response re-evaluated at the actual |alpha|^2.
    let b_at_m = params.beta_scaled(m);
    let d_at_m = params.delta0 - F::two() * b_at_m.re - params.gck * b_at_m.norm_sqr();
    let denom = Cplx::new(params.kappa * F::half(), -d_at_m);
    let rhs = Cplx::new(params.kappa.sqrt() * drive_scaled, F::zero());
    let r1 = (a * denom - rhs).norm() / (rhs.norm() + denom.norm() * a.norm()).max(F::epsilon());
    // Mechanical equation residual: stored beta against the closed form at
    // the actual occupation.
    let r2 = (b - b_at_m).norm() / b.norm().max(F::one());
    let residual = r1.max(r2);

    let g0_per_wm = params.g0 / params.omega_m;
    let alpha = a / Cplx::new(g0_per_wm, F::zero());
    let beta = b / Cplx::new(g0_per_wm, F::zero());
    Ok(SteadyState {
        alpha,
        beta,
        n_a: alpha.norm_sqr(),
        n,
        residual,
        degenerate: false,
        alpha_scaled: a,
        beta_scaled: b,
    })
}

/// All physical steady states at the given drive, sorted ascending in `n`.
///
/// Occupations come from the nonnegative real roots of the self-consistency
/// polynomial, polished on the exact modulus equation; amplitudes are then
/// reconstructed in closed form (never by iterating the coupled fixed point,
/// which can miss branches). Near-double roots merge into one state with the
/// `degenerate` flag set; a physical-root count outside 1-3 is an anomaly.
pub fn steady_states<F: Real>(
    params: &SystemParams<F>,
    drive: &DriveSpec<F>,
) -> Result<Vec<SteadyState<F>>> {
    params.validate()?;
    let drv = drive.alpha_in;
    if drv == F::zero() {
        let mut s = state_at_occupation(params, F::zero(), F::zero())?;
        s.residual = F::zero();
        return Ok(vec![s]);
    }

    let poly = self_consistency_poly(params, drive)?;
    let mut roots = real_nonneg_roots(&poly, F::of(numerics::REALNESS_TOL))?;
    for r in roots.iter_mut() {
        *r = polish_root(params, drv, *r);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Merge near-double roots (branch tangency) and flag them.
    let mut merged: Vec<(F, bool)> = Vec::with_capacity(roots.len());
    for r in roots {
        match merged.last_mut() {
            Some((prev, flag)) if (r - *prev).abs() <= F::of(DEGENERATE_TOL) * r.max(F::one()) => {
                *prev = (*prev + r) * F::half();
                *flag = true;
            }
            _ => merged.push((r, false)),
        }
    }

    let count = merged.len();
    if count == 0 || count > 3 {
        return Err(Error::RootCountAnomaly {
            count,
            drive: drv.to_f64().unwrap_or(f64::NAN),
            roots: merged.iter().map(|(r, _)| r.to_f64().unwrap_or(f64::NAN)).collect(),
        });
    }
    // Exactly two distinct states only happens at a fold tangency; treat the
    // pair as degenerate even when the merge threshold did not collapse it.
    let fold_pair = count == 2;

    let tol = F::of(STEADY_RESIDUAL_TOL);
    let mut out = Vec::with_capacity(count);
    for (n, flag) in merged {
        let mut s = state_at_occupation(params, n, drv)?;
        s.degenerate = flag || fold_pair;
        if s.residual > tol && !s.degenerate {
            return Err(Error::ResidualTooLarge {
                residual: s.residual.to_f64().unwrap_or(f64::NAN),
                tolerance: STEADY_RESIDUAL_TOL,
            });
        }
        out.push(s);
    }
    Ok(out)
}
