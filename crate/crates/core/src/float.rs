//! Scalar abstraction shared by all numeric kernels.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Floating-point scalar the whole crate is generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Sum + Send + Sync + 'static
{
    /// Conversion from an `f64` literal; panics only if the target type
    /// cannot represent ordinary finite values.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::of(2.0)
    }

    #[inline]
    fn half() -> Self {
        Self::of(0.5)
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Sum + Send + Sync + 'static
{
}

/// Complex number over the crate scalar.
pub type Cplx<F> = Complex<F>;
