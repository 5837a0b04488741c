//! Binary floating point with an explicit, arbitrary precision.
//!
//! A value is `(-1)^neg * mag * 2^exp` where `mag` carries at most `prec`
//! bits. Every operation rounds to nearest (ties to even) at the larger of
//! the operand precisions. There is no NaN or infinity; the exponent is an
//! `i64` and never overflows in practice.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::rational::Rational;
use super::round::{assemble_f64, bit_len, pow2, round_mag, round_ratio};

#[derive(Clone, Debug)]
pub struct BigFloat {
    neg: bool,
    mag: BigUint,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    fn from_parts(neg: bool, mag: BigUint, exp: i64, sticky: bool, prec: u32) -> Self {
        if mag.is_zero() {
            return BigFloat::zero(prec);
        }
        let (mag, exp) = round_mag(mag, exp, sticky, prec);
        BigFloat {
            neg,
            mag,
            exp,
            prec,
        }
    }

    pub fn zero(prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        BigFloat {
            neg: false,
            mag: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        BigFloat::from_parts(false, BigUint::from(1u32), 0, false, prec)
    }

    /// Exact conversion when `prec >= 53`, correctly rounded otherwise.
    pub fn from_f64(v: f64, prec: u32) -> Self {
        assert!(v.is_finite(), "non-finite value {v}");
        if v == 0.0 {
            return BigFloat::zero(prec);
        }
        let bits = v.to_bits();
        let neg = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        BigFloat::from_parts(neg, BigUint::from(m), e, false, prec)
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(x: &Rational, prec: u32) -> Self {
        if x.is_zero() {
            return BigFloat::zero(prec);
        }
        let (num, den) = x.parts();
        let (mag, exp) = round_ratio(num, den, prec);
        BigFloat {
            neg: x.is_negative(),
            mag,
            exp,
            prec,
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Same value rounded to another precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        BigFloat::from_parts(self.neg, self.mag.clone(), self.exp, false, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg && !self.is_zero()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            neg: false,
            ..self.clone()
        }
    }

    /// `floor(log2 |x|)`, or `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + bit_len(&self.mag) - 1)
        }
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            exp: self.exp + k,
            ..self.clone()
        }
    }

    /// Nearest double; saturates to infinity or zero outside the double range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (m, e) = round_mag(self.mag.clone(), self.exp, false, 53);
        match assemble_f64(&m, e, self.neg) {
            Some(v) => v,
            None => {
                let top = e + bit_len(&m);
                let v = if top > 1024 {
                    f64::INFINITY
                } else {
                    m.to_f64().unwrap_or(0.0) * pow2(e / 2) * pow2(e - e / 2)
                };
                if self.neg {
                    -v
                } else {
                    v
                }
            }
        }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec as i64;
        let len = bit_len(&self.mag);
        let mut shift = (2 * p + 4 - len).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let scaled = &self.mag << (shift as u64);
        let root = scaled.sqrt();
        let sticky = &root * &root != scaled;
        BigFloat::from_parts(false, root, (self.exp - shift) / 2, sticky, self.prec)
    }

    fn add_signed(&self, other: &BigFloat, negate_other: bool) -> BigFloat {
        let prec = self.prec.max(other.prec);
        let b_neg = other.neg ^ negate_other;
        if other.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            return BigFloat::from_parts(b_neg, other.mag.clone(), other.exp, false, prec);
        }
        // order so that `a` has the larger leading bit
        let top_self = self.exp + bit_len(&self.mag);
        let top_other = other.exp + bit_len(&other.mag);
        let (a, a_neg, b, b_neg, top_a, top_b) = if top_self >= top_other {
            (self, self.neg, other, b_neg, top_self, top_other)
        } else {
            (other, b_neg, self, self.neg, top_other, top_self)
        };
        if top_b < top_a - prec as i64 - 2 {
            // |b| is below a quarter ulp of |a|
            return BigFloat::from_parts(a_neg, a.mag.clone(), a.exp, false, prec);
        }
        let e = a.exp.min(b.exp);
        let ma = &a.mag << ((a.exp - e) as u64);
        let mb = &b.mag << ((b.exp - e) as u64);
        if a_neg == b_neg {
            BigFloat::from_parts(a_neg, ma + mb, e, false, prec)
        } else {
            match ma.cmp(&mb) {
                Ordering::Equal => BigFloat::zero(prec),
                Ordering::Greater => BigFloat::from_parts(a_neg, ma - mb, e, false, prec),
                Ordering::Less => BigFloat::from_parts(b_neg, mb - ma, e, false, prec),
            }
        }
    }

    fn mul_ref(&self, other: &BigFloat) -> BigFloat {
        let prec = self.prec.max(other.prec);
        BigFloat::from_parts(
            self.neg ^ other.neg,
            &self.mag * &other.mag,
            self.exp + other.exp,
            false,
            prec,
        )
    }

    fn div_ref(&self, other: &BigFloat) -> BigFloat {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return BigFloat::zero(prec);
        }
        let shift = (prec as i64 + 3 + bit_len(&other.mag) - bit_len(&self.mag)).max(0);
        let num = &self.mag << (shift as u64);
        let q = &num / &other.mag;
        let sticky = !(&num % &other.mag).is_zero();
        BigFloat::from_parts(
            self.neg ^ other.neg,
            q,
            self.exp - other.exp - shift,
            sticky,
            prec,
        )
    }

    fn cmp_mag(&self, other: &BigFloat) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let ta = self.exp + bit_len(&self.mag);
        let tb = other.exp + bit_len(&other.mag);
        if ta != tb {
            return ta.cmp(&tb);
        }
        let e = self.exp.min(other.exp);
        let ma = &self.mag << ((self.exp - e) as u64);
        let mb = &other.mag << ((other.exp - e) as u64);
        ma.cmp(&mb)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let sa = if self.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        };
        let sb = if other.is_zero() {
            0
        } else if other.neg {
            -1
        } else {
            1
        };
        if sa != sb {
            return Some(sa.cmp(&sb));
        }
        Some(match sa {
            0 => Ordering::Equal,
            1 => self.cmp_mag(other),
            _ => other.cmp_mag(self),
        })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                let ($a, $b) = (&self, &rhs);
                $body
            }
        }
        impl $trait<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                let ($a, $b) = (&self, rhs);
                $body
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.div_ref(b));

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(mut self) -> BigFloat {
        if !self.is_zero() {
            self.neg = !self.neg;
        }
        self
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -self.clone()
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bf(v: f64) -> BigFloat {
        BigFloat::from_f64(v, 53)
    }

    #[test]
    fn matches_ieee_at_53_bits() {
        let xs = [1.0, 3.0, 0.1, -2.5, 1e300, 7e-300, 123456.789];
        for &a in &xs {
            for &b in &xs {
                assert_eq!((bf(a) + bf(b)).to_f64(), a + b, "{a} + {b}");
                assert_eq!((bf(a) - bf(b)).to_f64(), a - b, "{a} - {b}");
                assert_eq!((bf(a) * bf(b)).to_f64(), a * b, "{a} * {b}");
                assert_eq!((bf(a) / bf(b)).to_f64(), a / b, "{a} / {b}");
            }
            assert_eq!(bf(a.abs()).sqrt().to_f64(), a.abs().sqrt());
        }
    }

    #[test]
    fn tiny_addend_is_absorbed() {
        let one = BigFloat::one(64);
        let tiny = BigFloat::one(64).mul_pow2(-200);
        assert_eq!(&one + &tiny, one);
        assert_eq!(&one - &tiny, one);
        assert!((&one - &tiny) <= one);
    }

    #[test]
    fn precision_mixing_takes_maximum() {
        let a = BigFloat::one(64);
        let b = BigFloat::from_f64(3.0, 200);
        assert_eq!((a / b).precision(), 200);
    }

    #[test]
    fn third_at_high_precision() {
        let third = BigFloat::from_rational(&"1/3".parse().unwrap(), 300);
        let back = &third * &BigFloat::from_f64(3.0, 300);
        let err = (&back - &BigFloat::one(300)).abs();
        assert!(err <= BigFloat::one(300).mul_pow2(-299));
        assert_eq!(third.to_f64(), 1.0 / 3.0);
    }

    #[test]
    fn sqrt_two_digits() {
        let two = BigFloat::from_f64(2.0, 256);
        let r = two.sqrt();
        let sq = &r * &r;
        assert!((&sq - &two).abs() <= BigFloat::one(256).mul_pow2(-250));
        assert_eq!(r.to_f64(), 2f64.sqrt());
    }

    #[test]
    fn ordering() {
        assert!(bf(-1.0) < bf(0.0));
        assert!(bf(0.0) < bf(1e-300));
        assert!(bf(-3.0) < bf(-2.0));
        assert!(bf(2.0) > bf(1.9999999));
        assert_eq!(bf(0.0), -bf(0.0));
    }

    proptest! {
        #[test]
        fn arithmetic_is_correctly_rounded(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            prop_assert_eq!((bf(a) + bf(b)).to_f64(), a + b);
            prop_assert_eq!((bf(a) * bf(b)).to_f64(), a * b);
            if b != 0.0 {
                prop_assert_eq!((bf(a) / bf(b)).to_f64(), a / b);
            }
        }
    }
}
