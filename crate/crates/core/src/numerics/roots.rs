//! All-roots polynomial solver: simultaneous Aberth-Ehrlich iteration on the
//! full complex root set, followed by Newton polishing.

use super::poly::Polynomial;
use super::ROOT_RESIDUAL_TOL;
use crate::{Cplx, Error, Real, Result};

const MAX_ITERATIONS: usize = 200;

/// Complex roots of a real polynomial, with multiplicity, plus normalized
/// residuals `|p(root)| / (max|coeff| * max(1,|root|)^degree)`.
#[derive(Clone, Debug)]
pub struct RootSet<F> {
    pub roots: Vec<Cplx<F>>,
    pub residuals: Vec<F>,
    /// False when the iteration cap was reached; the best iterate is still
    /// reported.
    pub converged: bool,
}

impl<F: Real> RootSet<F> {
    pub fn max_residual(&self) -> F {
        self.residuals.iter().fold(F::zero(), |m, &r| m.max(r))
    }
}

/// All complex roots of `p`.
///
/// Zero roots are deflated exactly, degrees one and two use closed forms, and
/// higher degrees run the simultaneous iteration. Non-convergence is reported
/// through the `converged` flag rather than an error so callers can decide.
pub fn poly_roots<F: Real>(p: &Polynomial<F>) -> Result<RootSet<F>> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }

    // Deflate exact zero roots (vanishing low-order coefficients).
    let mut coeffs: Vec<F> = p.coeffs().to_vec();
    let mut zero_roots = 0usize;
    while coeffs.len() > 1 && coeffs[0] == F::zero() {
        coeffs.remove(0);
        zero_roots += 1;
    }

    let mut roots: Vec<Cplx<F>> = vec![Cplx::new(F::zero(), F::zero()); zero_roots];
    let mut converged = true;

    let degree = coeffs.len() - 1;
    if degree >= 1 {
        let reduced = Polynomial::new(coeffs.clone())?;
        let found = match degree {
            1 => vec![Cplx::new(-coeffs[0] / coeffs[1], F::zero())],
            2 => quadratic_roots(coeffs[0], coeffs[1], coeffs[2]).to_vec(),
            _ => {
                let (rs, ok) = aberth(&reduced);
                converged = ok;
                rs
            }
        };
        for r in found {
            roots.push(newton_polish(&reduced, r));
        }
    }

    let residuals: Vec<F> = roots.iter().map(|&r| p.root_residual(r)).collect();
    let tol = F::of(ROOT_RESIDUAL_TOL).max(F::epsilon() * F::of(1e4));
    if residuals.iter().any(|&r| r > tol) {
        converged = false;
    }
    Ok(RootSet { roots, residuals, converged })
}

/// Roots of `a x^2 + b x + c = 0` given ascending coefficients `(c, b, a)`,
/// using the numerically stable split.
fn quadratic_roots<F: Real>(c0: F, c1: F, c2: F) -> [Cplx<F>; 2] {
    let disc = c1 * c1 - F::of(4.0) * c2 * c0;
    if disc >= F::zero() {
        let sq = disc.sqrt();
        let q = -(c1 + F::of(c1.signum().to_f64().unwrap_or(1.0)) * sq) * F::half();
        let r1 = q / c2;
        // q = 0 happens only when c1 = disc = 0.
        let r2 = if q != F::zero() { c0 / q } else { -r1 };
        [Cplx::new(r1, F::zero()), Cplx::new(r2, F::zero())]
    } else {
        let re = -c1 / (F::two() * c2);
        let im = (-disc).sqrt() / (F::two() * c2);
        [Cplx::new(re, im), Cplx::new(re, -im)]
    }
}

fn aberth<F: Real>(p: &Polynomial<F>) -> (Vec<Cplx<F>>, bool) {
    let n = p.degree();
    let dp = p.derivative();
    let coeffs = p.coeffs();
    let lead = coeffs[n];

    // Cauchy-style inclusion radius around the root centroid.
    let centroid = -coeffs[n - 1] / (F::of(n as f64) * lead);
    let radius = F::one()
        + coeffs[..n]
            .iter()
            .fold(F::zero(), |m, &c| m.max((c / lead).abs()));

    let mut z: Vec<Cplx<F>> = (0..n)
        .map(|k| {
            // Irrational angular offset avoids starting on a symmetry axis.
            let theta = F::of(2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.43721);
            Cplx::new(centroid + radius * theta.cos(), radius * theta.sin())
        })
        .collect();

    let eps = F::epsilon() * F::of(100.0);
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = F::zero();
        for k in 0..n {
            let pk = p.eval_complex(z[k]);
            let dk = dp.eval_complex(z[k]);
            if pk.norm() == F::zero() {
                continue;
            }
            let newton = pk / dk;
            let mut sum = Cplx::new(F::zero(), F::zero());
            for j in 0..n {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > F::zero() {
                        sum = sum + Cplx::new(F::one(), F::zero()) / diff;
                    }
                }
            }
            let denom = Cplx::new(F::one(), F::zero()) - newton * sum;
            let step = if denom.norm() > F::epsilon() { newton / denom } else { newton };
            z[k] = z[k] - step;
            max_step = max_step.max(step.norm() / z[k].norm().max(F::one()));
        }
        if max_step < eps {
            return (z, true);
        }
    }
    (z, false)
}

fn newton_polish<F: Real>(p: &Polynomial<F>, mut z: Cplx<F>) -> Cplx<F> {
    let dp = p.derivative();
    let mut best = z;
    let mut best_res = p.eval_complex(z).norm();
    for _ in 0..3 {
        let d = dp.eval_complex(z);
        if d.norm() < F::min_positive_value() {
            break;
        }
        z = z - p.eval_complex(z) / d;
        let res = p.eval_complex(z).norm();
        if res < best_res {
            best_res = res;
            best = z;
        }
    }
    best
}

/// Real nonnegative roots of `p`: real parts of roots whose imaginary part is
/// below `tol` (relative to the root scale) and whose value is above `-tol`,
/// clamped to zero, sorted ascending and deduplicated within `tol`.
///
/// An empty result is valid.
pub fn real_nonneg_roots<F: Real>(p: &Polynomial<F>, tol: F) -> Result<Vec<F>> {
    let set = poly_roots(p)?;
    let mut vals: Vec<F> = set
        .roots
        .iter()
        .filter(|z| z.im.abs() <= tol * z.norm().max(F::one()))
        .map(|z| z.re)
        .filter(|&x| x >= -tol * x.abs().max(F::one()))
        .map(|x| x.max(F::zero()))
        .collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut out: Vec<F> = Vec::with_capacity(vals.len());
    for v in vals {
        match out.last().copied() {
            Some(prev) if (v - prev).abs() <= tol * v.abs().max(F::one()) => {
                // Collapse the cluster to its running mean.
                let merged = (prev + v) * F::half();
                *out.last_mut().unwrap() = merged;
            }
            _ => out.push(v),
        }
    }
    Ok(out)
}

/// Roots of the monic quartic `x^4 + a3 x^3 + a2 x^2 + a1 x + a0`, returned
/// in conjugate pairs (exact pairing is enforced after polishing).
pub fn quartic_roots<F: Real>(a3: F, a2: F, a1: F, a0: F) -> Result<[Cplx<F>; 4]> {
    let p = Polynomial::new(vec![a0, a1, a2, a3, F::one()])?;
    let set = poly_roots(&p)?;
    if !set.converged {
        return Err(Error::RootsNotConverged {
            residual: set.max_residual().to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut roots = set.roots;
    pair_conjugates(&mut roots, &p);
    Ok([roots[0], roots[1], roots[2], roots[3]])
}

/// Symmetrize the root set of a real polynomial: snap near-real roots onto
/// the axis and average conjugate partners so pairing holds exactly.
fn pair_conjugates<F: Real>(roots: &mut [Cplx<F>], p: &Polynomial<F>) {
    let snap = F::of(1e-8);
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        if roots[i].im.abs() <= snap * roots[i].norm().max(F::one()) {
            // Accept as real only if that does not degrade the residual badly.
            let real = Cplx::new(roots[i].re, F::zero());
            if p.root_residual(real) <= p.root_residual(roots[i]) * F::of(10.0) + F::epsilon() {
                roots[i] = real;
            }
            used[i] = true;
            continue;
        }
        // Find the nearest conjugate partner among the unused roots.
        let conj = roots[i].conj();
        let mut best = None;
        let mut best_d = F::infinity();
        for (j, r) in roots.iter().enumerate() {
            if j == i || used[j] {
                continue;
            }
            let d = (*r - conj).norm();
            if d < best_d {
                best_d = d;
                best = Some(j);
            }
        }
        if let Some(j) = best {
            let avg = (roots[i] + roots[j].conj()) * Cplx::new(F::half(), F::zero());
            roots[i] = avg;
            roots[j] = avg.conj();
            used[i] = true;
            used[j] = true;
        }
    }
    roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p64(c: &[f64]) -> Polynomial<f64> {
        Polynomial::from_slice(c).unwrap()
    }

    #[test]
    fn factorable_quadratic() {
        // x^2 - 1 -> {-1, +1}
        let set = poly_roots(&p64(&[-1.0, 0.0, 1.0])).unwrap();
        let mut re: Vec<f64> = set.roots.iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(re[0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(re[1], 1.0, epsilon = 1e-12);
        assert!(set.roots.iter().all(|z| z.im.abs() < 1e-12));
    }

    #[test]
    fn factorable_cubic() {
        // x^3 - 6x^2 + 11x - 6 -> {1, 2, 3}
        let set = poly_roots(&p64(&[-6.0, 11.0, -6.0, 1.0])).unwrap();
        assert!(set.converged);
        let mut re: Vec<f64> = set.roots.iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert_relative_eq!(*got, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn degree_zero_errors() {
        assert!(matches!(poly_roots(&p64(&[3.0])), Err(Error::DegreeZero)));
    }

    #[test]
    fn no_real_roots_filtered() {
        // x^2 + 1 -> []
        let vals = real_nonneg_roots(&p64(&[1.0, 0.0, 1.0]), 1e-8).unwrap();
        assert!(vals.is_empty());
    }

    #[test]
    fn zero_root_kept_and_negative_dropped() {
        // x(x - 2) -> [0, 2]; x(x + 2) -> [0]
        let vals = real_nonneg_roots(&p64(&[0.0, -2.0, 1.0]), 1e-8).unwrap();
        assert_eq!(vals.len(), 2);
        assert_relative_eq!(vals[0], 0.0);
        assert_relative_eq!(vals[1], 2.0, epsilon = 1e-12);

        let vals = real_nonneg_roots(&p64(&[0.0, 2.0, 1.0]), 1e-8).unwrap();
        assert_eq!(vals, vec![0.0]);
    }

    #[test]
    fn quartic_two_imaginary_pairs() {
        // (x^2+1)(x^2+4) = x^4 + 5x^2 + 4 -> {+-i, +-2i}
        let roots = quartic_roots(0.0, 5.0, 0.0, 4.0).unwrap();
        let mut ims: Vec<f64> = roots.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in ims.iter().zip([-2.0, -1.0, 1.0, 2.0]) {
            assert_relative_eq!(*got, want, epsilon = 1e-9);
        }
        assert!(roots.iter().all(|z| z.re.abs() < 1e-9));
    }

    #[test]
    fn quartic_quadruple_root() {
        // (x+1)^4
        let roots = quartic_roots(4.0, 6.0, 4.0, 1.0).unwrap();
        for z in roots {
            assert!((z - Cplx::new(-1.0, 0.0)).norm() < 2e-3, "root {z}");
        }
        // Multiplicity four limits the attainable accuracy; the residual
        // contract still holds.
        let p = p64(&[1.0, 4.0, 6.0, 4.0, 1.0]);
        for z in roots {
            assert!(p.root_residual(z) <= 1e-10);
        }
    }

    #[test]
    fn quartic_conjugate_pairing_is_exact() {
        let roots = quartic_roots(0.72, 2.1656, 0.73296, 1.093924).unwrap();
        for z in roots.iter() {
            assert!(roots.iter().any(|w| *w == z.conj()), "unpaired root {z}");
        }
    }

    #[test]
    fn octic_within_cap() {
        // (x^2-1)(x^2-4)(x^2-9)(x^2+1)
        let mut c = vec![1.0];
        for p in [-1.0, 1.0, -2.0, 2.0, -3.0, 3.0] {
            c = super::super::poly_mul(&c, &[-p, 1.0]);
        }
        c = super::super::poly_mul(&c, &[1.0, 0.0, 1.0]);
        let set = poly_roots(&p64(&c)).unwrap();
        assert_eq!(set.roots.len(), 8);
        assert!(set.max_residual() < 1e-10);
    }

    proptest! {
        // Root residual contract and conjugate pairing on random quintics.
        #[test]
        fn residual_and_pairing_invariants(cs in proptest::collection::vec(-3.0f64..3.0, 6)) {
            prop_assume!(cs.last().unwrap().abs() > 1e-3);
            let p = p64(&cs);
            prop_assume!(p.degree() >= 1);
            let set = poly_roots(&p).unwrap();
            prop_assert_eq!(set.roots.len(), p.degree());
            if set.converged {
                for (&r, &res) in set.roots.iter().zip(&set.residuals) {
                    prop_assert!(res <= 1e-10, "residual {} at root {}", res, r);
                }
                // Complex roots of real polynomials pair up within tolerance.
                for z in set.roots.iter().filter(|z| z.im.abs() > 1e-7 * z.norm()) {
                    let has_partner = set
                        .roots
                        .iter()
                        .any(|w| (*w - z.conj()).norm() <= 1e-6 * z.norm().max(1.0));
                    prop_assert!(has_partner, "unpaired root {}", z);
                }
            }
        }

        // real_nonneg_roots output is sorted, nonnegative, and a subset of
        // the real roots of poly_roots.
        #[test]
        fn real_filter_invariants(cs in proptest::collection::vec(-2.0f64..2.0, 4)) {
            prop_assume!(cs.last().unwrap().abs() > 1e-3);
            let p = p64(&cs);
            prop_assume!(p.degree() >= 1);
            let set = poly_roots(&p).unwrap();
            prop_assume!(set.converged);
            let vals = real_nonneg_roots(&p, 1e-8).unwrap();
            for w in vals.windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
            for &v in &vals {
                prop_assert!(v >= 0.0);
                let near = set.roots.iter().any(|z| (z.re - v).abs() <= 1e-6 * v.max(1.0));
                prop_assert!(near);
            }
        }
    }
}
