//! Round-to-nearest-even helpers shared by the exact and multiprecision kernels.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub(crate) fn bit_len(m: &BigUint) -> i64 {
    m.bits() as i64
}

/// Rounds `m * 2^e` (plus a positive amount below the last bit of `m` when
/// `sticky` is set) to at most `bits` significant bits.
///
/// Callers that set `sticky` must supply at least `bits + 2` bits in `m`.
pub(crate) fn round_mag(m: BigUint, e: i64, sticky: bool, bits: u32) -> (BigUint, i64) {
    let len = bit_len(&m);
    if len <= bits as i64 {
        debug_assert!(!sticky || m.is_zero());
        return (m, e);
    }
    let shift = (len - bits as i64) as u64;
    let kept = &m >> shift;
    let rem = &m - (&kept << shift);
    let half = BigUint::one() << (shift - 1);
    let round_up = match rem.cmp(&half) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => sticky || kept.bit(0),
    };
    let mut kept = if round_up { kept + 1u32 } else { kept };
    let mut exp = e + shift as i64;
    if bit_len(&kept) > bits as i64 {
        kept >>= 1u32;
        exp += 1;
    }
    (kept, exp)
}

/// Correctly rounded `num / den` as `mant * 2^exp` with `mant` holding at most `bits` bits.
pub(crate) fn round_ratio(num: &BigUint, den: &BigUint, bits: u32) -> (BigUint, i64) {
    assert!(!den.is_zero());
    if num.is_zero() {
        return (BigUint::zero(), 0);
    }
    // quotient lies in [2^(e-1), 2^(e+1)); scale so that it carries bits + 2 bits or more
    let e = bit_len(num) - bit_len(den);
    let k = bits as i64 + 2 - e + 1;
    let (q, r) = if k >= 0 {
        let n = num << (k as u64);
        (&n / den, &n % den)
    } else {
        let d = den << ((-k) as u64);
        (num / &d, num % &d)
    };
    round_mag(q, -k, !r.is_zero(), bits)
}

/// `2^exp` as a double, for exponents with an exactly representable power.
pub(crate) fn pow2(exp: i64) -> f64 {
    if exp > 1023 {
        f64::INFINITY
    } else if exp >= -1022 {
        f64::from_bits(((exp + 1023) as u64) << 52)
    } else if exp >= -1074 {
        f64::from_bits(1u64 << (exp + 1074))
    } else {
        0.0
    }
}

/// Assembles a double from a mantissa of at most 53 bits. Returns `None`
/// when the value leaves the normal range.
pub(crate) fn assemble_f64(mant: &BigUint, exp: i64, negative: bool) -> Option<f64> {
    if mant.is_zero() {
        return Some(0.0);
    }
    let top = exp + bit_len(mant);
    if top > 1024 || top - 1 < -1022 {
        return None;
    }
    let digits = mant.to_u64_digits();
    let m = digits.first().copied().unwrap_or(0) as f64;
    // split the scaling so that neither factor leaves the representable range
    let half = exp / 2;
    let v = m * pow2(half) * pow2(exp - half);
    Some(if negative { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_go_to_even() {
        // 0b1011 rounded to 3 bits is a tie between 0b101 and 0b110
        let (m, e) = round_mag(BigUint::from(0b1011u32), 0, false, 3);
        assert_eq!((m, e), (BigUint::from(0b110u32), 1));
        let (m, e) = round_mag(BigUint::from(0b1001u32), 0, false, 3);
        assert_eq!((m, e), (BigUint::from(0b100u32), 1));
        let (m, e) = round_mag(BigUint::from(0b1001u32), 0, true, 3);
        assert_eq!((m, e), (BigUint::from(0b101u32), 1));
    }

    #[test]
    fn carry_renormalizes() {
        let (m, e) = round_mag(BigUint::from(0b1111u32), 0, false, 3);
        assert_eq!((m, e), (BigUint::from(0b100u32), 2));
    }

    #[test]
    fn ratio_matches_native_division() {
        for (a, b) in [(1u32, 3u32), (2, 7), (22, 7), (1, 10), (123456, 789)] {
            let (m, e) = round_ratio(&BigUint::from(a), &BigUint::from(b), 53);
            assert_eq!(assemble_f64(&m, e, false).unwrap(), a as f64 / b as f64);
        }
    }

    #[test]
    fn pow2_edges() {
        assert_eq!(pow2(0), 1.0);
        assert_eq!(pow2(-1074), f64::from_bits(1));
        assert_eq!(pow2(1023), 2f64.powi(1023));
    }
}
