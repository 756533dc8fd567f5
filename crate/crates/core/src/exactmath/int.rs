//! Arbitrary-precision signed integer with an `i128` fast path.
//!
//! Values that fit in `i128` are stored inline and every operation on them
//! uses checked arithmetic. When a checked operation overflows, the operands
//! are promoted to [`BigInt`] and the operation is redone there. Results are
//! demoted back to the inline form whenever they fit, so the representation
//! of a value is unique and the derived `Eq`/`Hash` are sound.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::ToPrimitive;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i128),
    // invariant: never fits in i128
    Big(BigInt),
}

/// Exact signed integer. No operation wraps, truncates or rounds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactInt(Repr);

impl ExactInt {
    pub const ZERO: ExactInt = ExactInt(Repr::Small(0));
    pub const ONE: ExactInt = ExactInt(Repr::Small(1));

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i128() {
            Some(s) => ExactInt(Repr::Small(s)),
            None => ExactInt(Repr::Big(v)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(s) => BigInt::from(*s),
            Repr::Big(b) => b.clone(),
        }
    }

    /// The inline value, if this integer is on the fast path.
    pub fn as_i128(&self) -> Option<i128> {
        match self.0 {
            Repr::Small(s) => Some(s),
            Repr::Big(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.as_i128().and_then(|s| u64::try_from(s).ok())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_i128().and_then(|s| i64::try_from(s).ok())
    }

    /// `|self|` as `u128`, if it fits.
    pub fn unsigned_abs_u128(&self) -> Option<u128> {
        match &self.0 {
            Repr::Small(s) => Some(s.unsigned_abs()),
            Repr::Big(b) => b.magnitude().to_u128(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(s) => *s < 0,
            Repr::Big(b) => b.sign() == Sign::Minus,
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(s) => *s > 0,
            Repr::Big(b) => b.sign() == Sign::Plus,
        }
    }

    pub fn signum(&self) -> i32 {
        if self.is_negative() {
            -1
        } else if self.is_zero() {
            0
        } else {
            1
        }
    }

    pub fn abs(&self) -> ExactInt {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_even(&self) -> bool {
        match &self.0 {
            Repr::Small(s) => s & 1 == 0,
            Repr::Big(b) => b.is_even(),
        }
    }

    /// Number of significant bits of `|self|`.
    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Small(s) => 128 - u64::from(s.unsigned_abs().leading_zeros()),
            Repr::Big(b) => b.bits(),
        }
    }

    /// Floored quotient and remainder; the remainder has the sign of `d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_mod_floor(&self, d: &ExactInt) -> (ExactInt, ExactInt) {
        assert!(!d.is_zero(), "division by zero");
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            // i128::MIN / -1 is the only overflowing case
            if !(*a == i128::MIN && *b == -1) {
                let (q, r) = a.div_mod_floor(b);
                return (ExactInt(Repr::Small(q)), ExactInt(Repr::Small(r)));
            }
        }
        let (q, r) = self.to_bigint().div_mod_floor(&d.to_bigint());
        (ExactInt::from_bigint(q), ExactInt::from_bigint(r))
    }

    /// Quotient of an exact division, or `None` if `d` does not divide `self`.
    pub fn checked_exact_div(&self, d: &ExactInt) -> Option<ExactInt> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_mod_floor(d);
        r.is_zero().then_some(q)
    }

    pub fn mod_floor(&self, d: &ExactInt) -> ExactInt {
        self.div_mod_floor(d).1
    }

    /// `self mod m` for a small positive modulus.
    pub fn rem_u64(&self, m: u64) -> u64 {
        assert!(m > 0, "modulus must be positive");
        match &self.0 {
            Repr::Small(s) => s.rem_euclid(i128::from(m)) as u64,
            Repr::Big(b) => b.mod_floor(&BigInt::from(m)).to_u64().expect("reduced below m"),
        }
    }

    pub fn divides(&self, n: &ExactInt) -> bool {
        if self.is_zero() {
            return n.is_zero();
        }
        n.mod_floor(self).is_zero()
    }
}

impl Default for ExactInt {
    fn default() -> Self {
        ExactInt::ZERO
    }
}

macro_rules! from_small {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactInt {
            fn from(v: $t) -> Self {
                ExactInt(Repr::Small(i128::from(v)))
            }
        }
    )*};
}
from_small!(i8, i16, i32, i64, u8, u16, u32, u64);

impl From<i128> for ExactInt {
    fn from(v: i128) -> Self {
        ExactInt(Repr::Small(v))
    }
}

impl From<u128> for ExactInt {
    fn from(v: u128) -> Self {
        match i128::try_from(v) {
            Ok(s) => ExactInt(Repr::Small(s)),
            Err(_) => ExactInt(Repr::Big(BigInt::from(v))),
        }
    }
}

impl From<usize> for ExactInt {
    fn from(v: usize) -> Self {
        ExactInt::from(v as u128)
    }
}

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt::from_bigint(v)
    }
}

impl From<&ExactInt> for BigInt {
    fn from(v: &ExactInt) -> Self {
        v.to_bigint()
    }
}

impl Ord for ExactInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            (Repr::Big(a), Repr::Big(b)) => a.cmp(b),
            // a big value lies outside the i128 range, so its sign decides
            (Repr::Big(a), Repr::Small(_)) => {
                if a.sign() == Sign::Minus {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Repr::Small(_), Repr::Big(b)) => {
                if b.sign() == Sign::Minus {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

impl PartialOrd for ExactInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident, $big:tt, $assign_tr:ident, $assign:ident) => {
        impl<'a, 'b> $tr<&'b ExactInt> for &'a ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &'b ExactInt) -> ExactInt {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(v) = a.$checked(*b) {
                        return ExactInt(Repr::Small(v));
                    }
                }
                ExactInt::from_bigint(self.to_bigint() $big rhs.to_bigint())
            }
        }
        impl $tr<ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &'b ExactInt) -> ExactInt {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<ExactInt> for &'a ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                self.$method(&rhs)
            }
        }
        impl $assign_tr<&ExactInt> for ExactInt {
            fn $assign(&mut self, rhs: &ExactInt) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_tr<ExactInt> for ExactInt {
            fn $assign(&mut self, rhs: ExactInt) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, +, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, -, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, *, MulAssign, mul_assign);

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        match &self.0 {
            Repr::Small(s) => match s.checked_neg() {
                Some(v) => ExactInt(Repr::Small(v)),
                None => ExactInt(Repr::Big(-BigInt::from(*s))),
            },
            Repr::Big(b) => ExactInt::from_bigint(-b),
        }
    }
}

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        -&self
    }
}

impl core::iter::Sum for ExactInt {
    fn sum<I: Iterator<Item = ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::ZERO, |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a ExactInt> for ExactInt {
    fn sum<I: Iterator<Item = &'a ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::ZERO, |acc, x| acc + x)
    }
}

impl core::iter::Product for ExactInt {
    fn product<I: Iterator<Item = ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::ONE, |acc, x| acc * x)
    }
}

impl<'a> core::iter::Product<&'a ExactInt> for ExactInt {
    fn product<I: Iterator<Item = &'a ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(s) => fmt::Display::fmt(s, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when parsing a decimal integer fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid decimal integer {0:?}")]
pub struct ParseExactIntError(pub String);

impl FromStr for ExactInt {
    type Err = ParseExactIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseExactIntError(s.into()));
        }
        if let Ok(v) = s.parse::<i128>() {
            return Ok(ExactInt(Repr::Small(v)));
        }
        BigInt::from_str(s)
            .map(ExactInt::from_bigint)
            .map_err(|_| ParseExactIntError(s.into()))
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::ExactInt;
    use alloc::string::{String, ToString};
    use core::str::FromStr;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    // decimal strings keep values of any size exact in JSON
    impl Serialize for ExactInt {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&self.to_string())
        }
    }

    impl<'de> Deserialize<'de> for ExactInt {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let s = String::deserialize(d)?;
            ExactInt::from_str(&s).map_err(D::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn overflow_escalates_instead_of_wrapping() {
        let max = ExactInt::from(i128::MAX);
        let sum = &max + &ExactInt::ONE;
        assert!(sum.as_i128().is_none());
        assert_eq!(sum.to_string(), "170141183460469231731687303715884105728");
        // and comes back down when the result fits again
        let back = &sum - &ExactInt::ONE;
        assert_eq!(back.as_i128(), Some(i128::MAX));
    }

    #[test]
    fn negating_min_escalates() {
        let min = ExactInt::from(i128::MIN);
        let neg = -&min;
        assert!(neg.is_positive());
        assert!(neg.as_i128().is_none());
        assert_eq!(-neg, min);
    }

    #[test]
    fn ordering_across_representations() {
        let big = ExactInt::from(u128::MAX);
        let small = ExactInt::from(5);
        assert!(small < big);
        assert!(-&big < small);
        assert!(-&big < -&small);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("12a".parse::<ExactInt>().is_err());
        assert!("".parse::<ExactInt>().is_err());
        assert!("-".parse::<ExactInt>().is_err());
        assert_eq!("-42".parse::<ExactInt>().unwrap(), ExactInt::from(-42));
        let huge = "123456789012345678901234567890123456789012345";
        assert_eq!(huge.parse::<ExactInt>().unwrap().to_string(), huge);
    }

    #[test]
    fn floored_division() {
        let (q, r) = ExactInt::from(-7).div_mod_floor(&ExactInt::from(4));
        assert_eq!((q, r), (ExactInt::from(-2), ExactInt::from(1)));
        assert_eq!(ExactInt::from(-7).rem_u64(4), 1);
    }
}
