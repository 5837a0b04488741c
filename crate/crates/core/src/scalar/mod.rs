//! Scalar kernels: exact rationals, multiprecision binary floats and the
//! adaptive precision driver.

mod bigfloat;
mod precision;
mod rational;
mod real;
mod round;

pub use bigfloat::BigFloat;
pub use precision::{refine_until_stable, PrecisionPolicy, Refined, DEFAULT_TARGET_TOLERANCE};
pub use rational::{audit, round_to_double, Rational};
pub use real::Real;
