use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::diophantine::{
    Equation, EulerProduct, FermatTriples, PairSystemSearch, Partial, ProductForm, ProductSquares, QuadraticScan,
    Quadruple, QuadrupleMode, RangeSearch, Ring, SearchBounds, SolutionRecord, Sys3,
};
use crate::error::{Error, Result};
use crate::exactmath::{coprime, ExactInt};
use crate::polysplit::{classify_cubic, CubicClass};
use crate::powersum::{CoprimeMode, EqualSumsSearch};

use super::coverage;
use super::params::ClaimParams;
use super::registry::{ClaimId, Profile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    /// No counterexample anywhere in the bounded space; says nothing beyond it.
    HoldsUpToBound,
    /// The smallest counterexample in canonical order.
    CounterexampleFound(SolutionRecord),
    /// The parameters fall outside the statement's hypotheses.
    Inapplicable(String),
}

impl ClaimStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimStatus::HoldsUpToBound => "HoldsUpToBound",
            ClaimStatus::CounterexampleFound(_) => "CounterexampleFound",
            ClaimStatus::Inapplicable(_) => "Inapplicable",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClaimStats {
    pub candidates_tested: u64,
    pub filtered_count: u64,
    /// Solutions of the searched relation (before deciding which refute the claim).
    pub matches: u64,
    pub counterexamples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: ClaimId,
    pub params: ClaimParams,
    pub status: ClaimStatus,
    pub stats: ClaimStats,
}

/// `x^3 + b x + a^n` over coprime `1 <= a <= a_max`, `1 <= |b| <= b_max`;
/// reports the cubics with three linear factors.
struct CubicScan {
    a_max: u64,
    b_max: u64,
    n: u32,
}

impl RangeSearch for CubicScan {
    fn outer_len(&self) -> u64 {
        self.a_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        let b_max = self.b_max as i64;
        for a in range.start + 1..=range.end {
            let ea = ExactInt::from(a);
            for b in (-b_max..=b_max).filter(|&b| b != 0) {
                let eb = ExactInt::from(b);
                if !coprime(&ea, &eb) {
                    continue;
                }
                out.candidates += 1;
                if classify_cubic(&eb, &ea, self.n)? == CubicClass::ThreeLinear {
                    let eq = Equation::CubicThreeLinear { n: self.n };
                    out.records.push(SolutionRecord::new("cubic", eq, vec![ea.clone(), eb], &["gcd(a,b)=1"])?);
                }
            }
        }
        Ok(out)
    }
}

struct Stage {
    search: Box<dyn RangeSearch + Send>,
    len: u64,
}

/// A prepared claim: its bounded space cut into work units.
///
/// Units are numbered `0..unit_count()`; each is one outer index of one
/// stage (stages are typically one per exponent). Any split of the units
/// into ranges, merged with [`Partial::merge`] and passed to
/// [`ClaimRun::finish`], gives the same outcome.
pub struct ClaimRun {
    params: ClaimParams,
    stages: Vec<Stage>,
    expected: u64,
    inapplicable: Option<String>,
}

fn exponents(p: &ClaimParams) -> Range<u32> {
    p.get("n_min") as u32..p.get("n_max") as u32 + 1
}

fn bounds(max: u64, n: u32) -> Result<SearchBounds> {
    SearchBounds::new(max, n)
}

impl ClaimRun {
    pub fn prepare(params: &ClaimParams) -> Result<Self> {
        let mut run =
            ClaimRun { params: params.clone(), stages: Vec::new(), expected: 0, inapplicable: None };
        if let Some(reason) = hypothesis_gap(params) {
            run.inapplicable = Some(reason);
            return Ok(run);
        }
        let p = params;
        let max = p.try_get("max").unwrap_or(0);
        let per_n = p.try_get("n_min").map_or(1, |lo| p.get("n_max") - lo + 1);
        match p.id() {
            ClaimId::T1_FORWARD | ClaimId::COR1_CUBIC => {
                let (a_max, b_max) = (p.get("a_max"), p.get("b_max"));
                for n in exponents(p) {
                    run.push(CubicScan { a_max, b_max, n });
                }
                run.expected = coverage::coprime_cubic_pairs(a_max, b_max) * per_n;
            }
            ClaimId::T1_CONVERSE => {
                for n in exponents(p) {
                    run.push(FermatTriples { bounds: bounds(max, n)?, primitive_only: true });
                }
                run.expected = coverage::ordered_pairs(max) * per_n;
            }
            ClaimId::EULER_EKL | ClaimId::WEAK_CONJ | ClaimId::THM2_EQUIV => {
                let (h, l, k) = (p.get("h"), p.get("l"), p.get("k"));
                let mode = if p.id() == ClaimId::EULER_EKL { CoprimeMode::None } else { CoprimeMode::Pairwise };
                run.push(EqualSumsSearch::new(h as u32, l as u32, k as u32, max, mode)?);
                run.expected = coverage::equal_sums(max, h, l);
            }
            ClaimId::ALT_CONJ | ClaimId::EULER_1769 => {
                let (h, k) = (p.get("h"), p.get("k"));
                let mode = if p.id() == ClaimId::ALT_CONJ { CoprimeMode::Pairwise } else { CoprimeMode::None };
                run.push(EqualSumsSearch::new(h as u32, 1, k as u32, max, mode)?);
                run.expected = coverage::equal_sums(max, h, 1);
            }
            ClaimId::LEM0_PARITY | ClaimId::LEM1_PAIR_SYSTEM => {
                for n in exponents(p) {
                    run.push(PairSystemSearch { bounds: bounds(max, n)? });
                }
                run.expected = coverage::ordered_pairs(max) * per_n;
            }
            ClaimId::THM3_XYZU | ClaimId::CONCL_XYZU_PAIRWISE => {
                let (mode, require) = if p.id() == ClaimId::THM3_XYZU {
                    (QuadrupleMode::PairsXyZu, true)
                } else {
                    (QuadrupleMode::FullyPairwise, false)
                };
                for n in exponents(p) {
                    run.push(Quadruple { bounds: bounds(max, n)?, mode, require_xy_eq_zu: require });
                }
                run.expected = coverage::quadruple(max) * per_n;
            }
            ClaimId::COR_QUADRATIC => {
                let (a_max, n_max) = (p.get("a_max"), p.get("n_max"));
                run.push(QuadraticScan::new(a_max, n_max as u32)?);
                run.expected = coverage::binomial(a_max, 2) * n_max;
            }
            ClaimId::THM4_SYS3 => {
                for n in exponents(p) {
                    run.push(Sys3 { bounds: bounds(max, n)? });
                }
                run.expected = coverage::sys3(max) * per_n;
            }
            ClaimId::FLT_PRODUCT_FORM | ClaimId::PRODUCT_QUARTIC => {
                let ns = if p.id() == ClaimId::PRODUCT_QUARTIC { 4..5 } else { exponents(p) };
                let count = u64::from(ns.end - ns.start);
                for n in ns {
                    run.push(ProductForm { bounds: bounds(max, n)? });
                }
                run.expected = coverage::binomial(max, 2) * count;
            }
            ClaimId::PRODUCT_SQUARES_Z => {
                run.push(ProductSquares::new(max, Ring::Z)?);
                run.expected = coverage::binomial(max, 2);
            }
            ClaimId::PRODUCT_SQUARES_ZI => {
                let norm = p.get("norm_max");
                run.push(ProductSquares::new(norm, Ring::GaussianZ)?);
                run.expected = coverage::gaussian_pairs(norm);
            }
            ClaimId::EULER_PRODUCT => {
                for n in exponents(p) {
                    run.push(EulerProduct { bounds: bounds(max, n)? });
                }
                run.expected = coverage::binomial(max, 3) * per_n;
            }
        }
        Ok(run)
    }

    fn push(&mut self, search: impl RangeSearch + Send + 'static) {
        let len = search.outer_len();
        self.stages.push(Stage { search: Box::new(search), len });
    }

    pub fn claim(&self) -> ClaimId {
        self.params.id()
    }

    pub fn params(&self) -> &ClaimParams {
        &self.params
    }

    pub fn unit_count(&self) -> u64 {
        self.stages.iter().map(|s| s.len).sum()
    }

    /// Runs the units in `range` (global numbering).
    pub fn run_units(&self, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        let mut offset = 0;
        for stage in &self.stages {
            let (lo, hi) = (range.start.max(offset), range.end.min(offset + stage.len));
            if lo < hi {
                out.merge(stage.search.run_range(lo - offset..hi - offset)?);
            }
            offset += stage.len;
        }
        Ok(out)
    }

    /// Checks coverage against the closed form and decides the status.
    pub fn finish(&self, merged: Partial) -> Result<ClaimOutcome> {
        if let Some(reason) = &self.inapplicable {
            return Ok(ClaimOutcome {
                claim: self.claim(),
                params: self.params.clone(),
                status: ClaimStatus::Inapplicable(reason.clone()),
                stats: ClaimStats::default(),
            });
        }
        let result = merged.finish();
        if result.candidates != self.expected {
            return Err(Error::CoverageMismatch { expected: self.expected, actual: result.candidates });
        }
        let mut counterexamples = Vec::new();
        for r in &result.records {
            if let Some(c) = refutes(&self.params, r)? {
                counterexamples.push(c);
            }
        }
        counterexamples.sort();
        let stats = ClaimStats {
            candidates_tested: result.candidates,
            filtered_count: result.filtered,
            matches: result.records.len() as u64,
            counterexamples: counterexamples.len() as u64,
        };
        let status = match counterexamples.into_iter().next() {
            Some(first) => ClaimStatus::CounterexampleFound(first),
            None => ClaimStatus::HoldsUpToBound,
        };
        Ok(ClaimOutcome { claim: self.claim(), params: self.params.clone(), status, stats })
    }
}

fn hypothesis_gap(p: &ClaimParams) -> Option<String> {
    let need_n = |lo: u64, text: &str| (p.get("n_min") < lo).then(|| format!("the statement requires {text}"));
    match p.id() {
        ClaimId::COR1_CUBIC => need_n(3, "n >= 3"),
        ClaimId::LEM1_PAIR_SYSTEM | ClaimId::THM3_XYZU => need_n(2, "n >= 2"),
        ClaimId::THM4_SYS3 | ClaimId::FLT_PRODUCT_FORM => need_n(3, "n > 2"),
        ClaimId::CONCL_XYZU_PAIRWISE => need_n(3, "n >= 3"),
        ClaimId::EULER_PRODUCT => need_n(4, "n > 3"),
        ClaimId::EULER_EKL | ClaimId::WEAK_CONJ => {
            (p.get("k") <= p.get("h") + p.get("l")).then(|| "the statement requires k > h + l".into())
        }
        ClaimId::ALT_CONJ | ClaimId::EULER_1769 => {
            (p.get("h") < 2 || p.get("k") <= p.get("h")).then(|| "the statement requires k > h >= 2".into())
        }
        _ => None,
    }
}

/// The record refuting the claim that `r` bears on, if any.
fn refutes(p: &ClaimParams, r: &SolutionRecord) -> Result<Option<SolutionRecord>> {
    let vals: Vec<ExactInt> = r.values().cloned().collect();
    let derived = |eq: Equation, vals: Vec<ExactInt>| -> Result<Option<SolutionRecord>> {
        Ok(if eq.holds(&vals)? { Some(SolutionRecord::new(p.id().as_str(), eq, vals, &[])?) } else { None })
    };
    match (p.id(), r.equation()) {
        (ClaimId::T1_FORWARD, Equation::CubicThreeLinear { n }) => {
            derived(Equation::CubicSplitWithoutWitness { n }, vals)
        }
        (ClaimId::T1_CONVERSE, Equation::Fermat { n }) => derived(Equation::WitnessCubicFails { n }, vals),
        (ClaimId::THM2_EQUIV, Equation::EqualSums { k, h, l }) => {
            derived(Equation::PowerSumRoundtripFails { k, h, l }, vals)
        }
        (ClaimId::LEM0_PARITY, Equation::PairSystem { n }) => derived(Equation::PairSystemOddProduct { n }, vals),
        (ClaimId::COR_QUADRATIC, _) => {
            let n1_even = vals[2].is_one() && (&vals[0] * &vals[1]).is_even();
            if n1_even && p.flag("exclude_n1_even") {
                Ok(None)
            } else {
                Ok(Some(r.clone().with_id(p.id().as_str())))
            }
        }
        _ => Ok(Some(r.clone().with_id(p.id().as_str()))),
    }
}

pub fn run_claim(params: &ClaimParams) -> Result<ClaimOutcome> {
    run_claim_partitioned(params, 1)
}

/// Same outcome as [`run_claim`], computed over `parts` unit ranges.
pub fn run_claim_partitioned(params: &ClaimParams, parts: usize) -> Result<ClaimOutcome> {
    let run = ClaimRun::prepare(params)?;
    let mut acc = Partial::default();
    for r in crate::diophantine::partition(run.unit_count(), parts) {
        acc.merge(run.run_units(r)?);
    }
    run.finish(acc)
}

/// Runs every claim at the profile defaults; errors are kept per claim.
pub fn run_suite(profile: Profile) -> Vec<(ClaimId, Result<ClaimOutcome>)> {
    ClaimId::ALL.iter().map(|&id| (id, run_claim(&ClaimParams::defaults(id, profile)))).collect()
}
