use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::bigfloat::BigFloat;

/// Floating-point operations needed by the dense eigenvalue and SVD kernels.
///
/// Constructors take `&self` so that a multiprecision value can hand its
/// precision to the constants it creates.
pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn lift_f64(&self, v: f64) -> Self;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    /// Distance from 1 to the next representable value.
    fn epsilon_like(&self) -> Self;
    fn mul_pow2(&self, k: i64) -> Self;
    /// `floor(log2 |x|)`, `None` for zero.
    fn exponent(&self) -> Option<i64>;
    fn to_f64(&self) -> f64;
    fn precision_bits(&self) -> u32;

    fn zero_like(&self) -> Self {
        self.lift_f64(0.0)
    }

    fn one_like(&self) -> Self {
        self.lift_f64(1.0)
    }

    fn is_zero(&self) -> bool {
        *self == self.zero_like()
    }
}

impl Real for f64 {
    fn lift_f64(&self, v: f64) -> Self {
        v
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn epsilon_like(&self) -> Self {
        f64::EPSILON
    }
    fn mul_pow2(&self, k: i64) -> Self {
        *self * 2f64.powi(k as i32)
    }
    fn exponent(&self) -> Option<i64> {
        if *self == 0.0 || !self.is_finite() {
            None
        } else {
            Some(self.abs().log2().floor() as i64)
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn precision_bits(&self) -> u32 {
        53
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Real for BigFloat {
    fn lift_f64(&self, v: f64) -> Self {
        BigFloat::from_f64(v, self.precision())
    }
    fn abs(&self) -> Self {
        BigFloat::abs(self)
    }
    fn sqrt(&self) -> Self {
        BigFloat::sqrt(self)
    }
    fn epsilon_like(&self) -> Self {
        BigFloat::one(self.precision()).mul_pow2(1 - self.precision() as i64)
    }
    fn mul_pow2(&self, k: i64) -> Self {
        BigFloat::mul_pow2(self, k)
    }
    fn exponent(&self) -> Option<i64> {
        BigFloat::exponent(self)
    }
    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }
    fn precision_bits(&self) -> u32 {
        self.precision()
    }
    fn is_zero(&self) -> bool {
        BigFloat::is_zero(self)
    }
}
