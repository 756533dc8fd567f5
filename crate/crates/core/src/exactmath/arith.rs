use alloc::format;

use num_integer::{Integer, Roots};

use super::ExactInt;
use crate::error::{Error, Result};

/// Greatest common divisor, always nonnegative. `gcd(0, 0) = 0`.
pub fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    match (a.unsigned_abs_u128(), b.unsigned_abs_u128()) {
        (Some(x), Some(y)) => ExactInt::from(gcd_u128(x, y)),
        _ => ExactInt::from_bigint(a.to_bigint().gcd(&b.to_bigint())),
    }
}

/// Binary gcd on machine words.
pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

pub fn coprime(a: &ExactInt, b: &ExactInt) -> bool {
    gcd(a, b).is_one()
}

/// Index pair `(i, j)`, `i < j`, of two entries sharing a nontrivial factor.
pub type CoprimeWitness = (usize, usize);

/// Checks every unordered pair. On failure returns the lexicographically
/// first offending index pair.
pub fn pairwise_coprime(xs: &[ExactInt]) -> Result<Option<CoprimeWitness>> {
    if xs.len() < 2 {
        return Err(Error::usage(format!(
            "pairwise_coprime needs at least 2 values, got {}",
            xs.len()
        )));
    }
    Ok(first_shared_factor(xs))
}

/// Same as [`pairwise_coprime`] without the length requirement; lists of
/// length 0 or 1 are vacuously coprime.
pub fn first_shared_factor(xs: &[ExactInt]) -> Option<CoprimeWitness> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if !coprime(&xs[i], &xs[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `base^exp` for `exp >= 1`. Exponent zero is rejected.
pub fn pow(base: &ExactInt, exp: u32) -> Result<ExactInt> {
    if exp == 0 {
        return Err(Error::usage("exponent must be at least 1"));
    }
    Ok(pow_unchecked(base, exp))
}

// exp = 0 gives 1 here; callers that accept user exponents go through `pow`.
pub(crate) fn pow_unchecked(base: &ExactInt, exp: u32) -> ExactInt {
    if let Some(b) = base.as_i128() {
        if let Some(v) = b.checked_pow(exp) {
            return ExactInt::from(v);
        }
    }
    ExactInt::from_bigint(num_traits::Pow::pow(base.to_bigint(), exp))
}

/// Floor of the `k`-th root of `n >= 0`, and whether it is exact.
pub fn integer_kth_root(n: &ExactInt, k: u32) -> Result<(ExactInt, bool)> {
    if n.is_negative() {
        return Err(Error::usage("integer_kth_root needs n >= 0"));
    }
    if k == 0 {
        return Err(Error::usage("root degree must be at least 1"));
    }
    let root = match n.unsigned_abs_u128() {
        Some(v) => ExactInt::from(v.nth_root(k)),
        None => ExactInt::from_bigint(n.to_bigint().nth_root(k)),
    };
    let exact = pow_unchecked(&root, k) == *n;
    Ok((root, exact))
}

/// The exact `k`-th root of `n`, if `n` is a perfect `k`-th power.
/// Negative `n` has a root only for odd `k`.
pub fn exact_kth_root(n: &ExactInt, k: u32) -> Option<ExactInt> {
    if k == 0 {
        return None;
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_kth_root(&-n, k).map(|r| -r);
    }
    match integer_kth_root(n, k) {
        Ok((r, true)) => Some(r),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&e(12), &e(18)), e(6));
        assert_eq!(gcd(&e(0), &e(5)), e(5));
        assert_eq!(gcd(&e(0), &e(0)), e(0));
        assert_eq!(gcd(&e(-12), &e(18)), e(6));
        // 95800 = 2^3 5^2 479, 414560 = 2^5 5 2591
        assert_eq!(gcd(&e(95800), &e(414560)), e(40));
    }

    #[test]
    fn pairwise_examples() {
        assert_eq!(pairwise_coprime(&[e(3), e(4), e(5)]).unwrap(), None);
        // gcd(27, 84) = 3 precedes the (84, 110) pair in index order
        let lp = [e(27), e(84), e(110), e(133), e(144)];
        assert_eq!(pairwise_coprime(&lp).unwrap(), Some((0, 1)));
        let frye = [e(95800), e(217519), e(414560), e(422481)];
        assert_eq!(pairwise_coprime(&frye).unwrap(), Some((0, 2)));
        assert!(pairwise_coprime(&[e(3)]).unwrap_err().is_usage());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow(&e(2), 10).unwrap(), e(1024));
        assert_eq!(pow(&e(144), 5).unwrap(), e(61917364224));
        assert_eq!(pow(&e(-3), 3).unwrap(), e(-27));
        assert!(pow(&e(2), 0).unwrap_err().is_usage());
        let big = pow(&e(10), 50).unwrap();
        assert_eq!(alloc::string::ToString::to_string(&big).len(), 51);
    }

    #[test]
    fn kth_root_examples() {
        assert_eq!(integer_kth_root(&e(3600), 2).unwrap(), (e(60), true));
        assert_eq!(integer_kth_root(&e(100), 3).unwrap(), (e(4), false));
        assert_eq!(integer_kth_root(&e(0), 3).unwrap(), (e(0), true));
        assert!(integer_kth_root(&e(-1), 3).is_err());
        // the Elkies quartic's missing term
        let d = pow(&e(20615673), 4).unwrap()
            - pow(&e(2682440), 4).unwrap()
            - pow(&e(18796760), 4).unwrap();
        assert_eq!(integer_kth_root(&d, 4).unwrap(), (e(15365639), true));
    }

    #[test]
    fn exact_root_of_negative() {
        assert_eq!(exact_kth_root(&e(-27), 3), Some(e(-3)));
        assert_eq!(exact_kth_root(&e(-4), 2), None);
    }
}
