use crate::{Error, Real, Result};

/// Bisection to an absolute bracket width `tol`. Requires a sign change on
/// `[lo, hi]`; a missing bracket means the caller's bracket search failed and
/// is reported as an error.
pub fn bisect<F: Real>(f: impl Fn(F) -> F, mut lo: F, mut hi: F, tol: F) -> Result<F> {
    if !(lo < hi) {
        return Err(Error::InvalidInput("bisect requires lo < hi".into()));
    }
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == F::zero() {
        return Ok(lo);
    }
    if f_hi == F::zero() {
        return Ok(hi);
    }
    if (f_lo > F::zero()) == (f_hi > F::zero()) {
        return Err(Error::NoSignChange {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
            f_lo: f_lo.to_f64().unwrap_or(f64::NAN),
            f_hi: f_hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    for _ in 0..200 {
        let mid = (lo + hi) * F::half();
        if hi - lo <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == F::zero() {
            return Ok(mid);
        }
        if (f_mid > F::zero()) == (f_lo > F::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * F::half())
}

/// Golden-section minimization on `[lo, hi]`; returns `(x, f(x))`. Used to
/// refine existence indicators (a margin dipping below zero) where grid
/// resolution alone would miss shallow wiggles.
pub fn golden_min<F: Real>(f: impl Fn(F) -> F, mut lo: F, mut hi: F, tol: F) -> (F, F) {
    let inv_phi = F::of(0.618_033_988_749_894_9);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = (lo + hi) * F::half();
    (x, f(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linear_root() {
        let x = bisect(|x: f64| x - 0.5, 0.0, 1.0, 1e-12).unwrap();
        assert_relative_eq!(x, 0.5, epsilon = 1e-11);
    }

    #[test]
    fn cosine_root() {
        let x = bisect(|x: f64| x.cos(), 1.0, 2.0, 1e-12).unwrap();
        assert_relative_eq!(x, std::f64::consts::FRAC_PI_2, epsilon = 1e-11);
    }

    #[test]
    fn missing_bracket_is_an_error() {
        assert!(matches!(
            bisect(|x: f64| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden_min(|x: f64| (x - 0.3) * (x - 0.3) - 2.0, -1.0, 1.0, 1e-10);
        assert_relative_eq!(x, 0.3, epsilon = 1e-8);
        assert_relative_eq!(fx, -2.0, epsilon = 1e-12);
    }
}
