use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmath::{first_shared_factor, ExactInt};

use super::identity::{recover_missing_term, verify_identity, Recovery, Slot, Verdict};
use super::PowerSumInstance;

/// The embedded table, format version 1.
pub const APPENDIX_V1: &str = include_str!("../../data/appendix_v1.txt");

/// One transcribed line `t_1^k + .. + t_h^k = rhs^k`, terms in printed order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AppendixLine {
    pub attribution: String,
    pub k: u32,
    pub terms: Vec<ExactInt>,
    pub rhs_value: ExactInt,
    pub as_printed: bool,
}

impl AppendixLine {
    pub fn instance(&self) -> Result<PowerSumInstance> {
        PowerSumInstance::new(self.k, self.terms.clone(), alloc::vec![self.rhs_value.clone()])
    }
}

fn bad_line(no: usize, why: &str) -> Error {
    Error::usage(format!("appendix line {no}: {why}"))
}

/// Parses the `attribution | k | terms | rhs` table; `#` starts a comment.
pub fn parse_appendix(text: &str) -> Result<Vec<AppendixLine>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [attribution, k, terms, rhs] = fields[..] else {
            return Err(bad_line(no, "expected 4 fields"));
        };
        let k = k.parse().map_err(|_| bad_line(no, "bad exponent"))?;
        let terms = terms
            .split_whitespace()
            .map(str::parse)
            .collect::<core::result::Result<Vec<ExactInt>, _>>()
            .map_err(|_| bad_line(no, "bad term"))?;
        if terms.is_empty() {
            return Err(bad_line(no, "no terms"));
        }
        let rhs_value = rhs.parse().map_err(|_| bad_line(no, "bad right-hand side"))?;
        out.push(AppendixLine { attribution: attribution.to_string(), k, terms, rhs_value, as_printed: true });
    }
    Ok(out)
}

pub fn appendix_lines() -> Vec<AppendixLine> {
    parse_appendix(APPENDIX_V1).expect("embedded table parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SlotRecovery {
    pub slot: Slot,
    pub printed: ExactInt,
    pub recovery: Recovery,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AppendixReport {
    pub line: AppendixLine,
    pub verdict: Verdict,
    /// First pair (printed order, right-hand base last) sharing a factor.
    pub coprimality_witness: Option<(ExactInt, ExactInt)>,
    /// One entry per slot, only for unbalanced lines.
    pub recoveries: Vec<SlotRecovery>,
}

impl AppendixReport {
    pub fn pairwise_coprime(&self) -> bool {
        self.coprimality_witness.is_none()
    }
}

pub fn verify_line(line: &AppendixLine) -> Result<AppendixReport> {
    let verdict = verify_identity(&line.instance()?);
    let mut all = line.terms.clone();
    all.push(line.rhs_value.clone());
    let coprimality_witness = first_shared_factor(&all).map(|(i, j)| (all[i].clone(), all[j].clone()));
    let mut recoveries = Vec::new();
    if !verdict.is_balanced() {
        let n = line.terms.len();
        for hole in 0..=n {
            let mut lhs: Vec<Option<ExactInt>> = line.terms.iter().cloned().map(Some).collect();
            let mut rhs = alloc::vec![Some(line.rhs_value.clone())];
            let printed = if hole < n { lhs[hole].take() } else { rhs[0].take() };
            let (slot, recovery) = recover_missing_term(&lhs, &rhs, line.k)?;
            recoveries.push(SlotRecovery { slot, printed: printed.expect("filled"), recovery });
        }
    }
    Ok(AppendixReport { line: line.clone(), verdict, coprimality_witness, recoveries })
}

pub fn verify_appendix() -> Result<Vec<AppendixReport>> {
    appendix_lines().iter().map(verify_line).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn table_shape() {
        let lines = appendix_lines();
        assert_eq!(lines.len(), 6);
        assert!(lines.iter().all(|l| l.as_printed));
        assert_eq!(lines[4].terms, [27, 84, 10, 133].map(e).to_vec());
    }

    #[test]
    fn verdicts() {
        let reports = verify_appendix().unwrap();
        let balanced: Vec<bool> = reports.iter().map(|r| r.verdict.is_balanced()).collect();
        assert_eq!(balanced, [false, true, true, true, false, true]);
        assert!(reports.iter().all(|r| !r.pairwise_coprime()));
        assert_eq!(reports[1].coprimality_witness, Some((e(95800), e(414560))));
        assert_eq!(reports[4].recoveries[2].recovery.term(), Some(&e(110)));
        assert_eq!(reports[0].recoveries[1].recovery.term(), Some(&e(15365639)));
        assert_eq!(reports[0].recoveries.len(), 4);
        assert!(reports[1].recoveries.is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_appendix("a | 4 | 1 2").is_err());
        assert!(parse_appendix("a | x | 1 2 | 3").is_err());
        assert!(parse_appendix("a | 4 |  | 3").is_err());
        assert_eq!(parse_appendix("# c\n\n").unwrap(), Vec::new());
    }
}
