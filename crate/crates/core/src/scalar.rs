//! Floating-point element abstraction.
//!
//! Everything numeric in this crate is generic over [`Scalar`] so the same
//! code runs at `f32` or `f64`. The crate-root aliases pin `f64`, which is
//! the precision the gradient-check tolerances are calibrated for.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Element type of [`Tensor`](crate::tensor::Tensor) and everything built on it.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to any Scalar")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("Scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Shorthand for `T::from_f64_lossy` at call sites full of literals.
pub fn cast<T: Scalar>(v: f64) -> T {
    T::from_f64_lossy(v)
}
