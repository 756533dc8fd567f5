use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::exactmath::{coprime, factorize, mod4_class, pow_unchecked, ExactInt, Mod4Class};

use super::families::coprime_splittings;
use super::{Equation, Partial, RangeSearch, SearchBounds, SolutionRecord};

/// Positive `(X, Y, X', Y')` with `gcd(X, Y) = gcd(X', Y') = 1` and
/// `XY = X'Y'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairSystem {
    x: ExactInt,
    y: ExactInt,
    xp: ExactInt,
    yp: ExactInt,
}

impl PairSystem {
    pub fn new(x: ExactInt, y: ExactInt, xp: ExactInt, yp: ExactInt) -> Result<Self> {
        if [&x, &y, &xp, &yp].iter().any(|v| !v.is_positive()) {
            return Err(Error::usage("pair system entries must be positive"));
        }
        if !coprime(&x, &y) {
            return Err(Error::usage("gcd(X, Y) must be 1"));
        }
        if !coprime(&xp, &yp) {
            return Err(Error::usage("gcd(X', Y') must be 1"));
        }
        if &x * &y != &xp * &yp {
            return Err(Error::usage("X*Y must equal X'*Y'"));
        }
        Ok(PairSystem { x, y, xp, yp })
    }

    pub fn values(&self) -> [&ExactInt; 4] {
        [&self.x, &self.y, &self.xp, &self.yp]
    }

    /// `X^n + Y^n`
    pub fn lhs(&self, n: u32) -> ExactInt {
        pow_unchecked(&self.x, n) + pow_unchecked(&self.y, n)
    }

    /// `X'^n - Y'^n`
    pub fn rhs(&self, n: u32) -> ExactInt {
        pow_unchecked(&self.xp, n) - pow_unchecked(&self.yp, n)
    }
}

/// Prime factors of one variable by residue class, with multiplicity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Mod4Counts {
    pub two: u32,
    pub plus_one: u32,
    pub minus_one: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParityReport {
    pub n: u32,
    pub xy_even: bool,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub lhs_mod4: u8,
    pub rhs_mod4: u8,
    /// In the order X, Y, X', Y'.
    pub class_counts: [Mod4Counts; 4],
    /// The two sides differ mod 4, so the system has no solution here.
    pub obstructed: bool,
}

fn mod4(v: &ExactInt) -> u8 {
    v.mod_floor(&ExactInt::from(4)).as_i128().expect("small") as u8
}

pub fn parity_report(s: &PairSystem, n: u32) -> Result<ParityReport> {
    if n == 0 {
        return Err(Error::usage("exponent n must be at least 1"));
    }
    let mut class_counts = [Mod4Counts::default(); 4];
    for (slot, v) in class_counts.iter_mut().zip(s.values()) {
        if v.is_one() {
            continue;
        }
        for (p, e) in factorize(v)?.factors {
            match mod4_class(&p)? {
                Mod4Class::Two => slot.two += e,
                Mod4Class::PlusOne => slot.plus_one += e,
                Mod4Class::MinusOne => slot.minus_one += e,
            }
        }
    }
    let (lhs, rhs) = (s.lhs(n), s.rhs(n));
    let (lhs_mod4, rhs_mod4) = (mod4(&lhs), mod4(&rhs));
    Ok(ParityReport {
        n,
        xy_even: (&s.x * &s.y).is_even(),
        lhs,
        rhs,
        lhs_mod4,
        rhs_mod4,
        class_counts,
        obstructed: lhs_mod4 != rhs_mod4,
    })
}

/// `X^n + Y^n = X'^n - Y'^n`, `XY = X'Y'`, over coprime `X <= Y <= max`;
/// each `XY` is split into its coprime factor pairs `(X', Y')`, both `<= max`.
#[derive(Debug, Clone)]
pub struct PairSystemSearch {
    pub bounds: SearchBounds,
}

impl RangeSearch for PairSystemSearch {
    fn outer_len(&self) -> u64 {
        self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let (m, n) = (self.bounds.per_var_max, self.bounds.exponent);
        let bound = ExactInt::from(m);
        let eq = Equation::PairSystem { n };
        let mut out = Partial::default();
        for x in range.start + 1..=range.end {
            for y in x..=m {
                out.candidates += 1;
                let (ex, ey) = (ExactInt::from(x), ExactInt::from(y));
                if !coprime(&ex, &ey) {
                    continue;
                }
                let lhs = pow_unchecked(&ex, n) + pow_unchecked(&ey, n);
                for (xp, yp) in coprime_splittings(&ex, &ey)? {
                    if xp > bound || yp > bound {
                        continue;
                    }
                    if pow_unchecked(&xp, n) - pow_unchecked(&yp, n) == lhs {
                        let vals = vec![ex.clone(), ey.clone(), xp, yp];
                        out.records.push(SolutionRecord::new(
                            "pair_system",
                            eq,
                            vals,
                            &["gcd(X,Y)=1", "gcd(Xp,Yp)=1"],
                        )?);
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn search_pair_system(b: SearchBounds) -> Result<Vec<SolutionRecord>> {
    Ok(PairSystemSearch { bounds: b }.run()?.records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(v: [i64; 4]) -> PairSystem {
        let [a, b, c, d] = v.map(ExactInt::from);
        PairSystem::new(a, b, c, d).unwrap()
    }

    #[test]
    fn parity_examples() {
        let r = parity_report(&ps([3, 5, 15, 1]), 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (ExactInt::from(34), ExactInt::from(224)));
        assert_eq!((r.lhs_mod4, r.rhs_mod4), (2, 0));
        assert!(r.obstructed && !r.xy_even);
        assert_eq!(r.class_counts[2], Mod4Counts { two: 0, plus_one: 1, minus_one: 1 });

        let r = parity_report(&ps([2, 3, 6, 1]), 2).unwrap();
        assert!(r.xy_even && r.obstructed);
        assert_eq!((r.lhs_mod4, r.rhs_mod4), (1, 3));

        let r = parity_report(&ps([2, 3, 6, 1]), 1).unwrap();
        assert!(!r.obstructed);
        assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn invalid_systems() {
        let e = |v: [i64; 4]| {
            let [a, b, c, d] = v.map(ExactInt::from);
            PairSystem::new(a, b, c, d).is_err()
        };
        assert!(e([2, 4, 8, 1]));
        assert!(e([2, 3, 5, 1]));
        assert!(!e([1, 6, 3, 2]));
        assert!(e([0, 1, 1, 0]));
    }

    #[test]
    fn search_examples() {
        let b = |m, n| SearchBounds::new(m, n).unwrap();
        assert!(search_pair_system(b(50, 2)).unwrap().is_empty());
        assert!(search_pair_system(b(30, 3)).unwrap().is_empty());
        let rs = search_pair_system(b(10, 1)).unwrap();
        let want: Vec<ExactInt> = [2, 3, 6, 1].map(ExactInt::from).to_vec();
        assert!(rs.iter().any(|r| r.values().cloned().collect::<Vec<_>>() == want));
    }
}
