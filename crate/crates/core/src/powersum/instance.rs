use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{pow_unchecked, ExactInt};

/// `x_1^k + ... + x_h^k - y_1^k - ... - y_l^k = 0` with positive terms.
///
/// Each side is kept in ascending order. `balanced` is computed by exact
/// evaluation when the instance is built and can't be set any other way.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerSumInstance {
    k: u32,
    lhs: Vec<ExactInt>,
    rhs: Vec<ExactInt>,
    balanced: bool,
}

impl PowerSumInstance {
    pub fn new(k: u32, mut lhs: Vec<ExactInt>, mut rhs: Vec<ExactInt>) -> Result<Self> {
        if k == 0 {
            return Err(Error::usage("exponent k must be at least 1"));
        }
        if lhs.is_empty() || rhs.is_empty() {
            return Err(Error::usage("both sides need at least one term"));
        }
        if let Some(bad) = lhs.iter().chain(&rhs).find(|t| !t.is_positive()) {
            return Err(Error::usage(alloc::format!("terms must be positive, got {bad}")));
        }
        lhs.sort();
        rhs.sort();
        let balanced = power_sum(&lhs, k) == power_sum(&rhs, k);
        Ok(PowerSumInstance { k, lhs, rhs, balanced })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn lhs(&self) -> &[ExactInt] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[ExactInt] {
        &self.rhs
    }

    pub fn h(&self) -> usize {
        self.lhs.len()
    }

    pub fn l(&self) -> usize {
        self.rhs.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    /// All terms, left side first.
    pub fn terms(&self) -> impl Iterator<Item = &ExactInt> {
        self.lhs.iter().chain(&self.rhs)
    }
}

pub fn power_sum(terms: &[ExactInt], k: u32) -> ExactInt {
    terms.iter().map(|t| pow_unchecked(t, k)).sum()
}

impl fmt::Display for PowerSumInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, ts: &[ExactInt]| -> fmt::Result {
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "{t}^{}", self.k)?;
            }
            Ok(())
        };
        side(f, &self.lhs)?;
        f.write_str(if self.balanced { " = " } else { " != " })?;
        side(f, &self.rhs)
    }
}

impl fmt::Debug for PowerSumInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
