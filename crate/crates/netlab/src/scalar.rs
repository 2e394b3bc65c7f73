use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar used by the model and metric arithmetic: f32 or f64.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
}

/// Lossless for every count this crate produces at f64; nearest value at f32.
pub(crate) fn from_usize<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("usize converts to scalar")
}

