//! Scalar abstraction: every physical quantity in this crate is generic over
//! a floating-point type.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + LowerExp + 'static
{
    /// Convert an `f64` constant (tolerance, config value) into the scalar type.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant converts to any Real")
    }

    /// Convert a count into the scalar type.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("usize converts to any Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_round_trip_for_f64() {
        assert_eq!(f64::real(1e-12), 1e-12);
        assert_eq!(f64::from_count(600), 600.0);
    }

    #[test]
    fn f32_underflows_small_constants_to_zero() {
        // Subnormal-below-range constants degrade gracefully instead of panicking.
        assert_eq!(f32::real(1e-300), 0.0);
    }
}
