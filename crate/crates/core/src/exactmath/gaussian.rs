//! Gaussian integers `a + bi` and their Euclidean arithmetic.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::prime::{factorize, sqrt_minus_one_mod, Mod4Class};
use super::{mod4_class, ExactInt};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaussianInt {
    pub re: ExactInt,
    pub im: ExactInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<ExactInt>, im: impl Into<ExactInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn units() -> [GaussianInt; 4] {
        [
            GaussianInt::new(1, 0),
            GaussianInt::new(0, 1),
            GaussianInt::new(-1, 0),
            GaussianInt::new(0, -1),
        ]
    }

    pub fn norm(&self) -> ExactInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Quotient rounded to the nearest lattice point, and the remainder.
    /// `N(remainder) <= N(d) / 2`.
    pub fn div_rem_round(&self, d: &GaussianInt) -> (GaussianInt, GaussianInt) {
        assert!(!d.is_zero(), "Gaussian division by zero");
        let n = d.norm();
        let num = self * &d.conj();
        let two = ExactInt::from(2);
        let two_n = &two * &n;
        // round(x / n) = floor((2x + n) / 2n)
        let round = |x: &ExactInt| (&two * x + &n).div_mod_floor(&two_n).0;
        let q = GaussianInt { re: round(&num.re), im: round(&num.im) };
        let r = self - &(&q * d);
        (q, r)
    }

    /// `self / d` if the division is exact.
    pub fn checked_exact_div(&self, d: &GaussianInt) -> Option<GaussianInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self * &d.conj();
        Some(GaussianInt {
            re: num.re.checked_exact_div(&n)?,
            im: num.im.checked_exact_div(&n)?,
        })
    }

    pub fn divides(&self, z: &GaussianInt) -> bool {
        if self.is_zero() {
            return z.is_zero();
        }
        z.checked_exact_div(self).is_some()
    }

    /// The associate with `re > 0, im >= 0` (zero maps to zero).
    pub fn canonical_associate(&self) -> GaussianInt {
        self.normalizing_unit().map_or_else(GaussianInt::zero, |u| self * &u)
    }

    /// The unit `u` for which `self * u` lies in the first quadrant.
    pub fn normalizing_unit(&self) -> Option<GaussianInt> {
        if self.is_zero() {
            return None;
        }
        GaussianInt::units().into_iter().find(|u| {
            let w = self * u;
            w.re.is_positive() && !w.im.is_negative()
        })
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<ExactInt> for GaussianInt {
    fn from(re: ExactInt) -> Self {
        GaussianInt { re, im: ExactInt::ZERO }
    }
}

impl<'b> Add<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &'b GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'b> Sub<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &'b GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'b> Mul<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &'b GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        &self * &o
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

/// Euclidean gcd normalized to the first quadrant. Undefined for `(0, 0)`.
pub fn gaussian_gcd(z: &GaussianInt, w: &GaussianInt) -> Result<GaussianInt> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::usage("gaussian_gcd(0, 0) is undefined"));
    }
    let (mut a, mut b) = (z.clone(), w.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem_round(&b);
        a = b;
        b = r;
    }
    Ok(a.canonical_associate())
}

pub fn gaussian_coprime(z: &GaussianInt, w: &GaussianInt) -> bool {
    matches!(gaussian_gcd(z, w), Ok(g) if g.is_unit())
}

/// `z = unit * prod pi^e` with each `pi` a first-quadrant Gaussian prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianFactorization {
    pub unit: GaussianInt,
    pub factors: Vec<(GaussianInt, u32)>,
}

impl GaussianFactorization {
    pub fn product(&self) -> GaussianInt {
        self.factors.iter().fold(self.unit.clone(), |acc, (p, e)| {
            (0..*e).fold(acc, |acc, _| &acc * p)
        })
    }

    /// A square root, when every exponent is even and the unit is `+-1`.
    pub fn square_root(&self) -> Option<GaussianInt> {
        if self.factors.iter().any(|(_, e)| e % 2 == 1) {
            return None;
        }
        let unit_root = if self.unit == GaussianInt::one() {
            GaussianInt::one()
        } else if self.unit == GaussianInt::new(-1, 0) {
            GaussianInt::i()
        } else {
            return None;
        };
        Some(self.factors.iter().fold(unit_root, |acc, (p, e)| {
            (0..e / 2).fold(acc, |acc, _| &acc * p)
        }))
    }
}

/// Factors a nonzero Gaussian integer through the rational factorization
/// of its norm.
pub fn gaussian_factorize(z: &GaussianInt) -> Result<GaussianFactorization> {
    if z.is_zero() {
        return Err(Error::usage("cannot factor 0 in Z[i]"));
    }
    let mut rest = z.clone();
    let mut factors = Vec::new();
    let norm_factors = factorize(&z.norm())?;
    let mut strip = |pi: GaussianInt, rest: &mut GaussianInt| {
        let mut e = 0;
        while let Some(q) = rest.checked_exact_div(&pi) {
            *rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pi, e));
        }
    };
    for (p, _) in &norm_factors.factors {
        match mod4_class(p)? {
            Mod4Class::Two => strip(GaussianInt::new(1, 1), &mut rest),
            Mod4Class::MinusOne => strip(GaussianInt::from(p.clone()), &mut rest),
            Mod4Class::PlusOne => {
                let pi = split_prime(p)?;
                let pi_bar = pi.conj().canonical_associate();
                strip(pi, &mut rest);
                strip(pi_bar, &mut rest);
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort();
    Ok(GaussianFactorization { unit: rest, factors })
}

/// First-quadrant `pi` with `N(pi) = p` for a prime `p = 1 (mod 4)`.
fn split_prime(p: &ExactInt) -> Result<GaussianInt> {
    let pv = p
        .to_u64()
        .ok_or_else(|| Error::BoundTooLarge(alloc::format!("splitting prime {p} in Z[i]")))?;
    let t = sqrt_minus_one_mod(pv).expect("p = 1 mod 4 has a square root of -1");
    // gcd(p, t + i) has norm p
    gaussian_gcd(&GaussianInt::from(p.clone()), &GaussianInt::new(t, 1))
}

/// Whether `z` is `w^2` for some Gaussian integer `w`; returns `w`.
pub fn gaussian_square_root(z: &GaussianInt) -> Result<Option<GaussianInt>> {
    if z.is_zero() {
        return Ok(Some(GaussianInt::zero()));
    }
    Ok(gaussian_factorize(z)?.square_root())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gaussian_gcd(&g(3, 0), &g(7, 0)).unwrap(), g(1, 0));
        assert_eq!(gaussian_gcd(&g(2, 0), &g(1, 1)).unwrap(), g(1, 1));
        assert_eq!(gaussian_gcd(&g(5, 0), &g(2, 1)).unwrap(), g(2, 1));
        assert_eq!(gaussian_gcd(&g(0, 0), &g(0, 3)).unwrap(), g(3, 0));
        assert!(gaussian_gcd(&g(0, 0), &g(0, 0)).unwrap_err().is_usage());
    }

    #[test]
    fn factorization_reconstructs() {
        for z in [g(2, 0), g(-5, 0), g(3, 4), g(-7, 24), g(0, 9), g(1, 1), g(12, -5)] {
            let f = gaussian_factorize(&z).unwrap();
            assert!(f.unit.is_unit());
            assert_eq!(f.product(), z, "{z}");
        }
    }

    #[test]
    fn square_detection() {
        // -1 = i^2 and 2i = (1+i)^2
        assert_eq!(gaussian_square_root(&g(-1, 0)).unwrap(), Some(g(0, 1)));
        let r = gaussian_square_root(&g(0, 2)).unwrap().unwrap();
        assert_eq!(r.square(), g(0, 2));
        assert_eq!(gaussian_square_root(&g(0, 1)).unwrap(), None);
        assert_eq!(gaussian_square_root(&g(2, 0)).unwrap(), None);
        let w = g(3, -2);
        let r = gaussian_square_root(&w.square()).unwrap().unwrap();
        assert_eq!(r.square(), w.square());
    }
}
