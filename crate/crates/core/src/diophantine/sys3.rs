//! `x1^3 + x2^3 + x3^3 + 3 x4^n = 0`, `(x1 + x2 + x3) x4 = 0` over nonzero,
//! pairwise coprime `x1, x2, x3`.
//!
//! The system is symmetric in `x1, x2, x3`, so only one ordering is kept:
//! the two entries sharing a sign come first, ascending by absolute value,
//! and the entry with the other sign is `x3`. Triples of one sign cannot
//! solve the system (their sum is nonzero and their cubes cannot cancel) but
//! are still scanned, sorted by absolute value.
//!
//! `x4` is never sign-normalized. When `x1 + x2 + x3 = 0` the first equation
//! reduces to `x4^n = x1 x2 (x1 + x2)`; for odd `n` that fixes `x4`, and for
//! even `n` the product must be nonnegative and both `±x4` are reported.
//! Flipping every sign of `(x1, x2, x3)` maps one branch onto the other only
//! for odd `n`, so both sign patterns are searched.

use alloc::vec;
use core::ops::Range;

use crate::error::Result;
use crate::exactmath::{first_shared_factor, pow_unchecked, ExactInt};

use super::record::nth_root;
use super::{Equation, Partial, RangeSearch, SearchBounds, SolutionRecord};

/// Whether `(x1, x2, x3)` is in the canonical order described above.
pub fn is_canonical_sys3(x: [i64; 3]) -> bool {
    let neg = x.iter().filter(|v| **v < 0).count();
    match neg {
        0 | 3 => x[0].abs() <= x[1].abs() && x[1].abs() <= x[2].abs(),
        _ => (x[0] < 0) == (x[1] < 0) && (x[2] < 0) != (x[0] < 0) && x[0].abs() <= x[1].abs(),
    }
}

#[derive(Debug, Clone)]
pub struct Sys3 {
    pub bounds: SearchBounds,
}

impl Sys3 {
    fn value(&self, idx: u64) -> i64 {
        let m = self.bounds.per_var_max as i64;
        let i = idx as i64;
        if i < m { i - m } else { i - m + 1 }
    }
}

impl RangeSearch for Sys3 {
    /// `x1` runs over `-max..=-1` then `1..=max`.
    fn outer_len(&self) -> u64 {
        2 * self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let n = self.bounds.exponent;
        let eq = Equation::Sys3 { n };
        let bound = ExactInt::from(self.bounds.per_var_max);
        let len = self.outer_len();
        let mut out = Partial::default();
        for i1 in range {
            let x1 = self.value(i1);
            for i2 in 0..len {
                let x2 = self.value(i2);
                for i3 in 0..len {
                    out.candidates += 1;
                    let x3 = self.value(i3);
                    if !is_canonical_sys3([x1, x2, x3]) {
                        continue;
                    }
                    let xs = [x1, x2, x3].map(ExactInt::from);
                    let cubes: ExactInt = xs.iter().map(|v| pow_unchecked(v, 3)).sum();
                    let mut x4s = vec![];
                    if x1 + x2 + x3 == 0 {
                        // 3 x4^n = -cubes
                        let Some(t) = (-&cubes).checked_exact_div(&ExactInt::from(3)) else { continue };
                        if t.is_zero() {
                            x4s.push(ExactInt::ZERO);
                        } else if let Some(r) = nth_root(&t, n) {
                            if n.is_multiple_of(2) {
                                x4s.push(-&r);
                            }
                            x4s.push(r);
                        }
                    } else if cubes.is_zero() {
                        x4s.push(ExactInt::ZERO);
                    }
                    x4s.retain(|v| v.abs() <= bound);
                    if x4s.is_empty() {
                        continue;
                    }
                    if first_shared_factor(&xs).is_some() {
                        out.filtered += x4s.len() as u64;
                        continue;
                    }
                    for x4 in x4s {
                        let mut vals = xs.to_vec();
                        vals.push(x4);
                        out.records.push(SolutionRecord::new("sys3", eq, vals, &["pairwise_coprime(x1,x2,x3)"])?);
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn search_sys3(b: SearchBounds) -> Result<alloc::vec::Vec<SolutionRecord>> {
    Ok(Sys3 { bounds: b }.run()?.records)
}
