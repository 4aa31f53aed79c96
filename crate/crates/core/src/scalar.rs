//! Scalar traits for the matrix and geometry layers.
//!
//! Integer matrices and exact quadratic-irrational geometry are generic over
//! an integer ring (`i64`, `i128`, `BigInt`). The final incidence test in the
//! hyperbolic plane is generic over a float type.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, NumCast, Signed, ToPrimitive};

/// Exact integer scalar.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + Hash + ToPrimitive + FromPrimitive
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + ToPrimitive + FromPrimitive
{
}

/// Floating point: f32 or f64.
pub trait RealScalar: Float + FromPrimitive + Debug {}
impl RealScalar for f32 {}
impl RealScalar for f64 {}

pub(crate) fn int<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("small integer fits every scalar")
}

/// Nearest float to an exact rational. `None` if either part overflows `F`.
pub fn ratio_to_real<T: IntScalar, F: RealScalar>(r: &Ratio<T>) -> Option<F> {
    let n: F = NumCast::from(r.numer().clone())?;
    let d: F = NumCast::from(r.denom().clone())?;
    Some(n / d)
}
