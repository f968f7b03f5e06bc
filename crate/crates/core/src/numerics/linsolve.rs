use crate::{Cplx, Error, Real, Result};

/// Solve the 4x4 complex system `A x = b` by Gaussian elimination with
/// partial pivoting. Used for inverse iteration on the dynamical matrix.
pub fn solve4<F: Real>(a: &[[Cplx<F>; 4]; 4], b: &[Cplx<F>; 4]) -> Result<[Cplx<F>; 4]> {
    let mut m = *a;
    let mut rhs = *b;
    for col in 0..4 {
        let mut pivot = col;
        for row in col + 1..4 {
            if m[row][col].norm() > m[pivot][col].norm() {
                pivot = row;
            }
        }
        if m[pivot][col].norm() < F::min_positive_value() {
            return Err(Error::SingularSystem);
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..4 {
            let factor = m[row][col] / m[col][col];
            for k in col..4 {
                m[row][k] = m[row][k] - factor * m[col][k];
            }
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }
    let zero = Cplx::new(F::zero(), F::zero());
    let mut x = [zero; 4];
    for row in (0..4).rev() {
        let mut acc = rhs[row];
        for k in row + 1..4 {
            acc = acc - m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}
