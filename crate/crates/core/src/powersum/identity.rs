use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmath::{exact_kth_root, ExactInt};

use super::{power_sum, PowerSumInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "verdict", rename_all = "snake_case"))]
pub enum Verdict {
    Balanced,
    /// `deficit = rhs_sum - lhs_sum`
    Unbalanced { lhs_sum: ExactInt, rhs_sum: ExactInt, deficit: ExactInt },
}

impl Verdict {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Verdict::Balanced)
    }
}

/// Evaluates both sides exactly.
pub fn verify_identity(inst: &PowerSumInstance) -> Verdict {
    let lhs_sum = power_sum(inst.lhs(), inst.k());
    let rhs_sum = power_sum(inst.rhs(), inst.k());
    if lhs_sum == rhs_sum {
        Verdict::Balanced
    } else {
        let deficit = &rhs_sum - &lhs_sum;
        Verdict::Unbalanced { lhs_sum, rhs_sum, deficit }
    }
}

/// Position of a term, 0-based within its side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Slot {
    Lhs(usize),
    Rhs(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "outcome", rename_all = "snake_case"))]
pub enum Recovery {
    Recovered { term: ExactInt },
    /// The missing `k`-th power would have to be `required`, which is not positive.
    NonPositive { required: ExactInt },
    /// `required` is positive but not a perfect `k`-th power.
    NotAPower { required: ExactInt },
}

impl Recovery {
    pub fn term(&self) -> Option<&ExactInt> {
        match self {
            Recovery::Recovered { term } => Some(term),
            _ => None,
        }
    }
}

/// Solves for the single `None` entry so that `sum lhs^k = sum rhs^k`.
pub fn recover_missing_term(
    lhs: &[Option<ExactInt>],
    rhs: &[Option<ExactInt>],
    k: u32,
) -> Result<(Slot, Recovery)> {
    if k == 0 {
        return Err(Error::usage("exponent k must be at least 1"));
    }
    let unknown: Vec<Slot> = lhs
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(i, _)| Slot::Lhs(i))
        .chain(rhs.iter().enumerate().filter(|(_, t)| t.is_none()).map(|(i, _)| Slot::Rhs(i)))
        .collect();
    let [slot] = unknown[..] else {
        return Err(Error::usage(format!("exactly one term must be unknown, found {}", unknown.len())));
    };
    let known = |side: &[Option<ExactInt>]| -> Result<ExactInt> {
        let terms: Vec<ExactInt> = side.iter().flatten().cloned().collect();
        if let Some(bad) = terms.iter().find(|t| !t.is_positive()) {
            return Err(Error::usage(format!("terms must be positive, got {bad}")));
        }
        Ok(power_sum(&terms, k))
    };
    let (l, r) = (known(lhs)?, known(rhs)?);
    let required = match slot {
        Slot::Lhs(_) => r - l,
        Slot::Rhs(_) => l - r,
    };
    let rec = if !required.is_positive() {
        Recovery::NonPositive { required }
    } else {
        match exact_kth_root(&required, k) {
            Some(term) => Recovery::Recovered { term },
            None => Recovery::NotAPower { required },
        }
    };
    Ok((slot, rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn inst(k: u32, l: &[i64], r: &[i64]) -> PowerSumInstance {
        PowerSumInstance::new(k, l.iter().map(|&v| e(v)).collect(), r.iter().map(|&v| e(v)).collect()).unwrap()
    }

    #[test]
    fn verdicts() {
        assert_eq!(verify_identity(&inst(3, &[3, 4, 5], &[6])), Verdict::Balanced);
        assert_eq!(verify_identity(&inst(4, &[95800, 217519, 414560], &[422481])), Verdict::Balanced);
        let v = verify_identity(&inst(5, &[27, 84, 10, 133], &[144]));
        let Verdict::Unbalanced { lhs_sum, rhs_sum, deficit } = v else { panic!() };
        assert_eq!(deficit, &rhs_sum - &lhs_sum);
        assert_eq!(deficit, crate::exactmath::pow(&e(110), 5).unwrap() - crate::exactmath::pow(&e(10), 5).unwrap());
    }

    #[test]
    fn recoveries() {
        let (s, r) = recover_missing_term(&[Some(e(3)), Some(e(4))], &[None], 2).unwrap();
        assert_eq!((s, r.term().cloned()), (Slot::Rhs(0), Some(e(5))));
        let lp = [Some(e(27)), Some(e(84)), None, Some(e(133))];
        let (s, r) = recover_missing_term(&lp, &[Some(e(144))], 5).unwrap();
        assert_eq!((s, r.term().cloned()), (Slot::Lhs(2), Some(e(110))));
        let el = [Some(e(2682440)), None, Some(e(18796760))];
        let (_, r) = recover_missing_term(&el, &[Some(e(20615673))], 4).unwrap();
        assert_eq!(r.term(), Some(&e(15365639)));
    }

    #[test]
    fn recovery_failures() {
        let (_, r) = recover_missing_term(&[Some(e(5)), None], &[Some(e(3))], 2).unwrap();
        assert_eq!(r, Recovery::NonPositive { required: e(-16) });
        let (_, r) = recover_missing_term(&[Some(e(1)), None], &[Some(e(3))], 2).unwrap();
        assert_eq!(r, Recovery::NotAPower { required: e(8) });
        assert!(recover_missing_term(&[None, None], &[Some(e(3))], 2).unwrap_err().is_usage());
        assert!(recover_missing_term(&[Some(e(1))], &[Some(e(3))], 2).unwrap_err().is_usage());
        assert!(recover_missing_term(&[Some(e(0)), None], &[Some(e(3))], 2).unwrap_err().is_usage());
    }
}
