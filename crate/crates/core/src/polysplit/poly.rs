use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{factorize, integer_kth_root, ExactInt};

/// Monic polynomial with integer coefficients, highest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonicIntPoly {
    coeffs: Vec<ExactInt>,
}

impl MonicIntPoly {
    /// `coeffs[0]` is the leading coefficient and must be exactly 1.
    pub fn new(coeffs: Vec<ExactInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::usage("polynomial degree must be at least 1"));
        }
        if !coeffs[0].is_one() {
            return Err(Error::usage(alloc::format!(
                "polynomial is not monic: leading coefficient {}",
                coeffs[0]
            )));
        }
        Ok(MonicIntPoly { coeffs })
    }

    /// `prod (x - r)` over `roots` (at least one root).
    pub fn from_roots(roots: &[ExactInt]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::usage("need at least one root"));
        }
        Ok(MonicIntPoly { coeffs: expand_roots(roots) })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, leading first.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> &ExactInt {
        &self.coeffs[self.degree() - i]
    }

    pub fn constant(&self) -> &ExactInt {
        self.coeffs.last().expect("degree >= 1")
    }

    pub fn eval(&self, x: &ExactInt) -> ExactInt {
        horner(&self.coeffs, x)
    }
}

fn horner(coeffs: &[ExactInt], x: &ExactInt) -> ExactInt {
    let mut acc = ExactInt::ZERO;
    for c in coeffs {
        acc = &acc * x + c;
    }
    acc
}

/// Coefficients of `prod (x - r)`, leading first; `[1]` for no roots.
pub(crate) fn expand_roots(roots: &[ExactInt]) -> Vec<ExactInt> {
    let mut c = alloc::vec![ExactInt::ONE];
    for r in roots {
        // multiply by (x - r)
        let mut next = c.clone();
        next.push(ExactInt::ZERO);
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] -= &(ci * r);
        }
        c = next;
    }
    c
}

/// Polynomial product of two coefficient lists, leading first.
pub(crate) fn multiply(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
    let mut out = alloc::vec![ExactInt::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Divides by `(x - r)`; returns the quotient if the remainder is zero.
fn deflate(coeffs: &[ExactInt], r: &ExactInt) -> Option<Vec<ExactInt>> {
    let mut q = Vec::with_capacity(coeffs.len() - 1);
    let mut acc = ExactInt::ZERO;
    for c in &coeffs[..coeffs.len() - 1] {
        acc = &acc * r + c;
        q.push(acc.clone());
    }
    let rem = &acc * r + coeffs.last().expect("nonempty");
    rem.is_zero().then_some(q)
}

/// Upper bound on the absolute value of every complex root of a monic
/// polynomial: `2 * max_i ceil(|a_{n-i}|^(1/i))`, which dominates Fujiwara's.
fn root_bound(coeffs: &[ExactInt]) -> ExactInt {
    let mut best = ExactInt::ZERO;
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let (r, exact) = integer_kth_root(&c.abs(), i as u32).expect("nonnegative, i >= 1");
        let ceil = if exact { r } else { r + ExactInt::ONE };
        if ceil > best {
            best = ceil;
        }
    }
    best * ExactInt::from(2)
}

/// Positive divisors of `n` that are `<= limit`, ascending.
fn divisors_up_to(n: &ExactInt, limit: &ExactInt) -> Result<Vec<ExactInt>> {
    let f = factorize(n)?;
    let mut out = alloc::vec![ExactInt::ONE];
    for (p, e) in &f.factors {
        let mut grown = Vec::new();
        for d in &out {
            let mut v = d.clone();
            for _ in 0..*e {
                v = &v * p;
                if v > *limit {
                    break;
                }
                grown.push(v.clone());
            }
        }
        out.extend(grown);
    }
    out.retain(|d| d <= limit);
    out.sort();
    Ok(out)
}

/// All integer roots with multiplicity, ascending, and the root-free cofactor.
pub(crate) fn split_off_integer_roots(
    poly: &MonicIntPoly,
) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
    let mut roots = Vec::new();
    let mut rest: Vec<ExactInt> = poly.coeffs.clone();
    while rest.len() > 1 && rest.last().is_some_and(ExactInt::is_zero) {
        rest.pop();
        roots.push(ExactInt::ZERO);
    }
    if rest.len() > 1 {
        // monic: every rational root is an integer dividing the constant term
        let bound = root_bound(&rest);
        let candidates = divisors_up_to(&rest.last().expect("nonempty").abs(), &bound)?;
        'scan: for d in candidates {
            for r in [d.clone(), -&d] {
                while let Some(q) = deflate(&rest, &r) {
                    rest = q;
                    roots.push(r.clone());
                    if rest.len() == 1 {
                        break 'scan;
                    }
                }
            }
        }
    }
    roots.sort();
    Ok((roots, rest))
}

impl fmt::Display for MonicIntPoly {
    /// Renders as e.g. `x^3 - 481*x + 3600`; the output parses back to the
    /// same coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            let e = n - idx;
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(cs: &[i64]) -> MonicIntPoly {
        MonicIntPoly::new(cs.iter().map(|&c| ExactInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn render() {
        assert_eq!(p(&[1, 0, -481, 3600]).to_string(), "x^3 - 481*x + 3600");
        assert_eq!(p(&[1, 0]).to_string(), "x");
        assert_eq!(p(&[1, 1, -1]).to_string(), "x^2 + x - 1");
        assert_eq!(p(&[1, -1, 0, 0]).to_string(), "x^3 - x^2");
    }

    #[test]
    fn rejects_non_monic() {
        assert!(MonicIntPoly::new(alloc::vec![ExactInt::from(2), ExactInt::ONE]).is_err());
        assert!(MonicIntPoly::new(alloc::vec![ExactInt::ONE]).is_err());
    }

    #[test]
    fn expansion_matches_known_cubic() {
        let roots: Vec<ExactInt> = [9, 16, -25].iter().map(|&r| ExactInt::from(r)).collect();
        assert_eq!(MonicIntPoly::from_roots(&roots).unwrap(), p(&[1, 0, -481, 3600]));
    }

    #[test]
    fn root_bound_dominates_roots() {
        let big = p(&[1, 0, -481, 3600]);
        assert!(root_bound(big.coeffs()) >= ExactInt::from(25));
    }

    #[test]
    fn repeated_and_zero_roots() {
        // x^2 (x - 1)^2 (x + 3)
        let roots: Vec<ExactInt> = [0, 0, 1, 1, -3].iter().map(|&r| ExactInt::from(r)).collect();
        let poly = MonicIntPoly::from_roots(&roots).unwrap();
        let (found, rest) = split_off_integer_roots(&poly).unwrap();
        let mut want = roots.clone();
        want.sort();
        assert_eq!(found, want);
        assert_eq!(rest, [ExactInt::ONE]);
    }
}
