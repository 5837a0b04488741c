//! Adaptive precision: rerun a multiprecision computation at doubling
//! precision until two consecutive levels agree.

use super::bigfloat::BigFloat;
use crate::error::{Error, Result};

/// Relative tolerance targeted by default for certified doubles.
pub const DEFAULT_TARGET_TOLERANCE: f64 = 1e-13;

#[derive(Clone, Debug, PartialEq)]
pub struct PrecisionPolicy {
    pub initial_bits: u32,
    pub max_bits: u32,
    pub agreement_rtol: f64,
}

impl PrecisionPolicy {
    pub fn new(initial_bits: u32, max_bits: u32, agreement_rtol: f64) -> Result<Self> {
        if initial_bits < 64 {
            return Err(Error::InvalidArgument(format!(
                "initial precision {initial_bits} is below 64 bits"
            )));
        }
        if max_bits < initial_bits {
            return Err(Error::InvalidArgument(format!(
                "max precision {max_bits} is below the initial precision {initial_bits}"
            )));
        }
        if !(agreement_rtol > 0.0 && agreement_rtol < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "agreement tolerance {agreement_rtol} is not in (0, 1)"
            )));
        }
        Ok(PrecisionPolicy {
            initial_bits,
            max_bits,
            agreement_rtol,
        })
    }

    /// Default bit budget with an agreement tolerance a thousand times tighter than `target`.
    pub fn for_tolerance(target: f64) -> Result<Self> {
        PrecisionPolicy::new(256, 16384, 1e-3 * target)
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy::for_tolerance(DEFAULT_TARGET_TOLERANCE).expect("valid default policy")
    }
}

/// Doubles certified by agreement of two consecutive precision levels.
#[derive(Clone, Debug, PartialEq)]
pub struct Refined {
    pub values: Vec<f64>,
    /// Precision of the run whose values were returned.
    pub bits: u32,
}

fn agrees(lo: &[BigFloat], hi: &[BigFloat], rtol: f64) -> bool {
    lo.len() == hi.len()
        && lo.iter().zip(hi).all(|(a, b)| {
            let tol = BigFloat::from_f64(rtol, b.precision());
            let diff = (a - b).abs();
            if b.is_zero() {
                diff <= tol
            } else {
                diff <= &tol * &b.abs()
            }
        })
}

/// Runs `compute` at `initial_bits`, `2 * initial_bits`, ... (never above
/// `max_bits`) and returns the first higher-precision result that agrees with
/// its predecessor componentwise, rounded to double.
pub fn refine_until_stable<F>(policy: &PrecisionPolicy, mut compute: F) -> Result<Refined>
where
    F: FnMut(u32) -> Result<Vec<BigFloat>>,
{
    let mut bits = policy.initial_bits;
    let mut previous = compute(bits)?;
    loop {
        let next_bits = bits.saturating_mul(2);
        if next_bits > policy.max_bits {
            return Err(Error::NoConvergence(format!(
                "results did not stabilize below {} bits",
                policy.max_bits
            )));
        }
        let current = compute(next_bits)?;
        if agrees(&previous, &current, policy.agreement_rtol) {
            return Ok(Refined {
                values: current.iter().map(BigFloat::to_f64).collect(),
                bits: next_bits,
            });
        }
        previous = current;
        bits = next_bits;
    }
}
