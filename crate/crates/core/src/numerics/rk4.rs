//! Classical fourth-order Runge-Kutta stepping on a four-dimensional real
//! state (the Re/Im pairs of the cavity and mechanical amplitudes).

use crate::{Error, Real, Result};

pub type State4<F> = [F; 4];

/// Trajectory norm above `OVERFLOW_GUARD * max(initial norm, 1)` terminates
/// the integration with the `diverged` flag set; unstable fixed points blow
/// up exponentially and must stop cleanly.
pub const OVERFLOW_GUARD: f64 = 1e12;

#[derive(Clone, Debug)]
pub struct IntegrationResult<F> {
    pub times: Vec<F>,
    pub states: Vec<State4<F>>,
    pub diverged: bool,
}

#[inline]
fn norm4<F: Real>(y: &State4<F>) -> F {
    (y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]).sqrt()
}

/// One RK4 step of size `dt` for the autonomous field `f`.
#[inline]
pub fn rk4_step<F: Real>(f: &impl Fn(&State4<F>) -> State4<F>, y: &State4<F>, dt: F) -> State4<F> {
    let half = F::half();
    let sixth = F::of(1.0 / 6.0);
    let k1 = f(y);
    let y2 = [
        y[0] + half * dt * k1[0],
        y[1] + half * dt * k1[1],
        y[2] + half * dt * k1[2],
        y[3] + half * dt * k1[3],
    ];
    let k2 = f(&y2);
    let y3 = [
        y[0] + half * dt * k2[0],
        y[1] + half * dt * k2[1],
        y[2] + half * dt * k2[2],
        y[3] + half * dt * k2[3],
    ];
    let k3 = f(&y3);
    let y4 = [y[0] + dt * k3[0], y[1] + dt * k3[1], y[2] + dt * k3[2], y[3] + dt * k3[3]];
    let k4 = f(&y4);
    let mut out = *y;
    for i in 0..4 {
        out[i] = y[i] + dt * sixth * (k1[i] + F::two() * k2[i] + F::two() * k3[i] + k4[i]);
    }
    out
}

/// Integrate `y' = f(y)` from `y0` to `t_end` with fixed step `dt`, sampling
/// every `stride` steps (the final state is always recorded).
///
/// Divergence past the overflow guard truncates the trajectory and sets the
/// flag; it is a legitimate outcome for unstable initial conditions, not an
/// error.
pub fn integrate_fixed_step<F: Real>(
    f: impl Fn(&State4<F>) -> State4<F>,
    y0: State4<F>,
    t_end: F,
    dt: F,
    stride: usize,
) -> Result<IntegrationResult<F>> {
    if !(dt > F::zero()) || !(t_end > F::zero()) {
        return Err(Error::InvalidInput("integration requires dt > 0 and t_end > 0".into()));
    }
    let f0 = f(&y0);
    if f0.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("vector field at initial state"));
    }
    let stride = stride.max(1);
    let steps = (t_end / dt).ceil().to_f64().unwrap_or(0.0) as usize;
    let guard = F::of(OVERFLOW_GUARD) * norm4(&y0).max(F::one());

    let mut times = Vec::with_capacity(steps / stride + 2);
    let mut states = Vec::with_capacity(steps / stride + 2);
    let mut y = y0;
    let mut t = F::zero();
    times.push(t);
    states.push(y);
    let mut diverged = false;

    for step in 1..=steps {
        y = rk4_step(&f, &y, dt);
        t = dt * F::of(step as f64);
        let n = norm4(&y);
        if !n.is_finite() || n > guard {
            diverged = true;
            times.push(t);
            states.push(y);
            break;
        }
        if step % stride == 0 || step == steps {
            times.push(t);
            states.push(y);
        }
    }
    Ok(IntegrationResult { times, states, diverged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn scalar_exponential_decay() {
        // y' = -y on the first component; y(1) = 1/e within 1e-8 at dt = 1e-3.
        let f = |y: &State4<f64>| [-y[0], 0.0, 0.0, 0.0];
        let r = integrate_fixed_step(f, [1.0, 0.0, 0.0, 0.0], 1.0, 1e-3, 100).unwrap();
        let y_end = r.states.last().unwrap()[0];
        assert_relative_eq!(y_end, (-1.0f64).exp(), epsilon = 1e-8);
        assert!(!r.diverged);
    }

    #[test]
    fn complex_exponential_error_bound() {
        // y' = lambda y with lambda = -0.3 + i, integrated one unit of time:
        // relative error within 10 |lambda dt|^4.
        let (lr, li) = (-0.3, 1.0);
        let f = move |y: &State4<f64>| [lr * y[0] - li * y[1], li * y[0] + lr * y[1], 0.0, 0.0];
        for dt in [1e-2, 5e-3, 2e-3] {
            let r = integrate_fixed_step(f, [1.0, 0.0, 0.0, 0.0], 1.0, dt, usize::MAX).unwrap();
            let s = r.states.last().unwrap();
            let exact = num_complex::Complex64::new(lr, li).exp();
            let err = (num_complex::Complex64::new(s[0], s[1]) - exact).norm() / exact.norm();
            let lam_dt = (lr * lr + li * li).sqrt() * dt;
            assert!(err <= 10.0 * lam_dt.powi(4), "err {err} at dt {dt}");
        }
    }

    #[test]
    fn harmonic_oscillator_energy_drift() {
        // 100 periods at dt = period/1000: energy drift below 1e-6.
        let f = |y: &State4<f64>| [y[1], -y[0], 0.0, 0.0];
        let period = 2.0 * std::f64::consts::PI;
        let r = integrate_fixed_step(f, [1.0, 0.0, 0.0, 0.0], 100.0 * period, period / 1000.0, 10_000)
            .unwrap();
        let s = r.states.last().unwrap();
        let energy = s[0] * s[0] + s[1] * s[1];
        assert!((energy - 1.0).abs() < 1e-6, "drift {}", (energy - 1.0).abs());
    }

    #[test]
    fn divergence_truncates_with_flag() {
        let f = |y: &State4<f64>| [y[0], 0.0, 0.0, 0.0];
        let r = integrate_fixed_step(f, [1.0, 0.0, 0.0, 0.0], 50.0, 1e-2, 100).unwrap();
        assert!(r.diverged);
        assert!(*r.times.last().unwrap() < 50.0);
    }

    #[test]
    fn rejects_bad_steps() {
        let f = |_: &State4<f64>| [0.0; 4];
        assert!(integrate_fixed_step(f, [0.0; 4], 1.0, 0.0, 1).is_err());
        assert!(integrate_fixed_step(f, [0.0; 4], -1.0, 0.1, 1).is_err());
    }
}
