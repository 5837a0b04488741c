//! Exact rational scalars.
//!
//! Every arithmetic operation is exact. Additions and subtractions also feed a
//! per-thread cancellation counter (see [`audit`]) so that callers can verify
//! that a computation never combines magnitudes of opposite effective sign.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::round::{assemble_f64, round_ratio};
use crate::error::{Error, Result};

/// Exact arbitrary-precision rational number in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

pub mod audit {
    //! Counts effective subtractions: `a - b` with `a`, `b` nonzero and of the
    //! same sign, and `a + b` with `a`, `b` nonzero and of opposite sign.

    use std::cell::Cell;

    thread_local! {
        static CANCELLATIONS: Cell<u64> = const { Cell::new(0) };
    }

    pub(super) fn record() {
        CANCELLATIONS.with(|c| c.set(c.get() + 1));
    }

    /// Cancellations recorded on this thread so far.
    pub fn cancellations() -> u64 {
        CANCELLATIONS.with(|c| c.get())
    }

    /// Runs `f` and returns its result with the number of cancellations it performed.
    pub fn track<R>(f: impl FnOnce() -> R) -> (R, u64) {
        let before = cancellations();
        let out = f();
        (out, cancellations() - before)
    }
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero(
                "rational with zero denominator".into(),
            ));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// The exact value of a finite double.
    pub fn from_f64(v: f64) -> Result<Self> {
        BigRational::from_float(v)
            .map(Rational)
            .ok_or_else(|| Error::Range(format!("{v} is not finite")))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero(format!("{self} / 0")));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Nearest double (ties to even). Fails when the value leaves the normal double range.
    pub fn to_f64(&self) -> Result<f64> {
        if self.is_zero() {
            return Ok(0.0);
        }
        let num = self.numer().magnitude();
        let den = self.denom().magnitude();
        let (m, e) = round_ratio(num, den, 53);
        assemble_f64(&m, e, self.is_negative()).ok_or_else(|| Error::Range(self.to_string()))
    }

    /// Magnitudes of numerator and denominator.
    pub(crate) fn parts(&self) -> (&BigUint, &BigUint) {
        (self.numer().magnitude(), self.denom().magnitude())
    }
}

/// `round_to_double` for call sites that prefer a free function.
pub fn round_to_double(x: &Rational) -> Result<f64> {
    x.to_f64()
}

fn add_raw(a: &BigRational, b: &BigRational) -> BigRational {
    if !a.is_zero() && !b.is_zero() && a.is_negative() != b.is_negative() {
        audit::record();
    }
    a + b
}

fn sub_raw(a: &BigRational, b: &BigRational) -> BigRational {
    if !a.is_zero() && !b.is_zero() && a.is_negative() == b.is_negative() {
        audit::record();
    }
    a - b
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $raw:expr) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($raw(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($raw(&self.0, &rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($raw(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($raw(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add, add_raw);
forward_binop!(Sub, sub, sub_raw);
forward_binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b);
// panics on a zero divisor like the primitive types; use `checked_div` for a Result
forward_binop!(Div, div, |a: &BigRational, b: &BigRational| a / b);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 = add_raw(&self.0, &rhs.0);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 = sub_raw(&self.0, &rhs.0);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigUint> for Rational {
    fn from(v: BigUint) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_int(tok: &str, whole: &str) -> Result<BigInt> {
    let digits = tok.strip_prefix(['+', '-']).unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid rational token `{whole}`")));
    }
    tok.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid rational token `{whole}`")))
}

/// Parses `p` or `p/q` with decimal integers.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, s)?)),
            Some((p, q)) => {
                let p = parse_int(p, s)?;
                let q = parse_int(q, s)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Rational::new(p, q)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn round_simple_values() {
        assert_eq!(r("0").to_f64().unwrap(), 0.0);
        assert_eq!(r("1/2").to_f64().unwrap(), 0.5);
        assert_eq!(r("-3/4").to_f64().unwrap(), -0.75);
    }

    #[test]
    fn exact_from_double() {
        assert_eq!(Rational::from_f64(0.1).unwrap().to_f64().unwrap(), 0.1);
        assert_eq!(Rational::from_f64(-2.5).unwrap(), r("-5/2"));
        assert!(Rational::from_f64(f64::NAN).is_err());
    }

    #[test]
    fn one_third_matches_decimal_parse() {
        // 40 significant digits of 1/3 parse to the correctly rounded double
        let expected: f64 = "0.3333333333333333333333333333333333333333"
            .parse()
            .unwrap();
        assert_eq!(r("1/3").to_f64().unwrap(), expected);
        let expected: f64 = "0.6666666666666666666666666666666666666667"
            .parse()
            .unwrap();
        assert_eq!(r("2/3").to_f64().unwrap(), expected);
    }

    #[test]
    fn out_of_range_is_an_error() {
        let huge = Rational::from_integer(BigInt::from(2).pow(1024));
        assert!(matches!(huge.to_f64(), Err(Error::Range(_))));
        let tiny = Rational::new(1, BigInt::from(2).pow(1100)).unwrap();
        assert!(matches!(tiny.to_f64(), Err(Error::Range(_))));
        let max = Rational::from_integer(BigInt::from(2).pow(1023));
        assert_eq!(max.to_f64().unwrap(), 2f64.powi(1023));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("6/4").to_string(), "3/2");
        assert_eq!(r("-7").to_string(), "-7");
        assert_eq!(r(" 2/-4 ").to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("/3".parse::<Rational>().is_err());
    }

    #[test]
    fn audit_counts_effective_subtractions() {
        let (_, n) = audit::track(|| {
            let a = r("3");
            let b = r("2");
            let _ = &a + &b; // same sign sum
            let _ = &a - &(-&b); // opposite sign difference
            let _ = &a - &Rational::zero();
        });
        assert_eq!(n, 0);
        let (_, n) = audit::track(|| {
            let _ = r("3") - r("2");
            let _ = r("3") + r("-2");
        });
        assert_eq!(n, 2);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn add_sub_mul_div_roundtrip(a in small_rational(), b in small_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a.clone());
            }
            prop_assert!(a.denom().is_positive());
        }

        #[test]
        fn rounding_is_monotone(a in small_rational(), b in small_rational()) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(lo.to_f64().unwrap() <= hi.to_f64().unwrap());
        }

        #[test]
        fn rounding_agrees_with_native_division(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000) {
            // both operands are exact doubles, so IEEE division is correctly rounded
            let x = Rational::new(p, q).unwrap();
            prop_assert_eq!(x.to_f64().unwrap(), p as f64 / q as f64);
        }
    }
}
