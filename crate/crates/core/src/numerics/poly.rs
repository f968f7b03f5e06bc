use crate::{Cplx, Error, Real, Result};

/// Largest polynomial degree the kernels accept. The model produces nothing
/// beyond degree 6 (fold polynomial); the cap guards against builder bugs.
pub const MAX_DEGREE: usize = 8;

/// Real polynomial with coefficients stored in ascending degree.
///
/// Construction trims vanished leading coefficients so the degree is well
/// defined, and rejects non-finite coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Real> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DegreeZero);
        }
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::NonFinite("polynomial coefficient"));
            }
            let _ = i;
        }
        // Trim leading coefficients that vanished identically (e.g. the
        // cross-Kerr terms of the self-consistency polynomial at gck = 0).
        // The threshold is relative to the largest coefficient so genuinely
        // small leading terms survive.
        let scale = coeffs.iter().fold(F::zero(), |m, c| m.max(c.abs()));
        let tol = scale * F::of(1e-14);
        while coeffs.len() > 1 && coeffs.last().map(|c| c.abs() <= tol) == Some(true) {
            coeffs.pop();
        }
        if coeffs.len() - 1 > MAX_DEGREE {
            return Err(Error::DegreeTooHigh(coeffs.len() - 1));
        }
        Ok(Self { coeffs })
    }

    pub fn from_slice(coeffs: &[F]) -> Result<Self> {
        Self::new(coeffs.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Largest coefficient magnitude; the natural residual scale.
    pub fn coeff_scale(&self) -> F {
        self.coeffs.iter().fold(F::zero(), |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: F) -> F {
        let mut acc = F::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Cplx<F>) -> Cplx<F> {
        let mut acc = Cplx::new(F::zero(), F::zero());
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self { coeffs: vec![F::zero()] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * F::of(k as f64))
            .collect();
        Self { coeffs }
    }

    /// Residual of a candidate root, normalized per the kernel contract:
    /// `|p(r)| / (max|coeff| * max(1, |r|)^degree)`.
    pub fn root_residual(&self, r: Cplx<F>) -> F {
        let scale = self.coeff_scale().max(F::min_positive_value());
        let growth = r.norm().max(F::one()).powi(self.degree() as i32);
        self.eval_complex(r).norm() / (scale * growth)
    }
}

// Coefficient-vector helpers used by the model to assemble polynomials before
// validation. All operate on ascending-degree slices.

pub fn poly_add<F: Real>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_else(F::zero);
            let y = b.get(i).copied().unwrap_or_else(F::zero);
            x + y
        })
        .collect()
}

pub fn poly_mul<F: Real>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

pub fn poly_scale<F: Real>(a: &[F], k: F) -> Vec<F> {
    a.iter().map(|&x| x * k).collect()
}

/// Multiply by `x^k`.
pub fn poly_shift<F: Real>(a: &[F], k: usize) -> Vec<F> {
    let mut out = vec![F::zero(); k];
    out.extend_from_slice(a);
    out
}
