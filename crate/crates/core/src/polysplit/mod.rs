//! Monic integer polynomials over Q and the two bridges between split
//! polynomials and power-sum identities:
//!
//! * a cubic `x^3 + b x + a^n` splits over Q exactly when its roots are
//!   `p^n, q^n, -r^n` for a pairwise coprime solution of `p^n + q^n = r^n`
//!   with `a = pqr`;
//! * a degree-`h + l` polynomial with vanishing `x^(h+l-1)` term and
//!   pairwise coprime `k`-th power roots encodes
//!   `x_1^k + .. + x_h^k = y_1^k + .. + y_l^k`.
//!
//! Root finding is exact: candidates are divisors of the constant term below
//! a root bound, confirmed by synthetic division. No floating point.

mod poly;

use alloc::vec::Vec;

pub use poly::MonicIntPoly;

use crate::error::{Error, Result};
use crate::exactmath::{exact_kth_root, first_shared_factor, gcd, pow_unchecked, ExactInt};
use crate::powersum::PowerSumInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SplitType {
    FullySplit,
    PartialSplit,
    NoLinearFactor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    /// Ascending, with multiplicity.
    pub integer_roots: Vec<ExactInt>,
    /// Root-free cofactor; `None` when the polynomial splits completely.
    pub residual_factor: Option<MonicIntPoly>,
    pub split_type: SplitType,
}

/// Integer roots with multiplicity, ascending.
pub fn integer_roots(poly: &MonicIntPoly) -> Result<Vec<ExactInt>> {
    Ok(poly::split_off_integer_roots(poly)?.0)
}

pub fn analyze(poly: &MonicIntPoly) -> Result<SplitReport> {
    let (roots, rest) = poly::split_off_integer_roots(poly)?;
    // the factors must multiply back to the input
    let linear = poly::expand_roots(&roots);
    if poly::multiply(&linear, &rest) != poly.coeffs() {
        return Err(Error::Unverified(alloc::format!("factorization of {poly} does not expand back")));
    }
    let split_type = if rest.len() == 1 {
        SplitType::FullySplit
    } else if roots.is_empty() {
        SplitType::NoLinearFactor
    } else {
        SplitType::PartialSplit
    };
    let residual_factor = (rest.len() > 1)
        .then(|| MonicIntPoly::new(rest))
        .transpose()?;
    Ok(SplitReport { integer_roots: roots, residual_factor, split_type })
}

/// Factorization shape of a monic cubic over Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CubicClass {
    Irreducible,
    OneLinearTimesIrreducibleQuadratic,
    ThreeLinear,
}

/// `x^3 + b x + a^n`, checking `a > 0`, `b != 0`, `gcd(a, b) = 1`.
pub fn cubic_from_parts(b: &ExactInt, a: &ExactInt, n: u32) -> Result<MonicIntPoly> {
    if n == 0 {
        return Err(Error::usage("exponent n must be at least 1"));
    }
    if !a.is_positive() {
        return Err(Error::usage(alloc::format!("hypothesis a > 0 violated (a = {a})")));
    }
    if b.is_zero() {
        return Err(Error::usage("hypothesis b != 0 violated"));
    }
    if !gcd(a, b).is_one() {
        return Err(Error::usage(alloc::format!("hypothesis gcd(a, b) = 1 violated (a = {a}, b = {b})")));
    }
    MonicIntPoly::new(alloc::vec![ExactInt::ONE, ExactInt::ZERO, b.clone(), pow_unchecked(a, n)])
}

/// For a monic cubic, no rational root means irreducible, and one root leaves
/// a quadratic whose own integer roots have already been split off.
pub fn classify_cubic(b: &ExactInt, a: &ExactInt, n: u32) -> Result<CubicClass> {
    let poly = cubic_from_parts(b, a, n)?;
    Ok(match integer_roots(&poly)?.len() {
        0 => CubicClass::Irreducible,
        1 => CubicClass::OneLinearTimesIrreducibleQuadratic,
        3 => CubicClass::ThreeLinear,
        m => unreachable!("a monic cubic cannot have exactly {m} integer roots"),
    })
}

/// Positive `p, q, r` with `p^n + q^n = r^n`, pairwise coprime, `p <= q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FermatWitness {
    p: ExactInt,
    q: ExactInt,
    r: ExactInt,
    n: u32,
}

impl FermatWitness {
    pub fn new(p: ExactInt, q: ExactInt, r: ExactInt, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::usage("exponent n must be at least 1"));
        }
        if !(p.is_positive() && q.is_positive() && r.is_positive()) {
            return Err(Error::usage("witness terms must be positive"));
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        if pow_unchecked(&p, n) + pow_unchecked(&q, n) != pow_unchecked(&r, n) {
            return Err(Error::usage(alloc::format!("{p}^{n} + {q}^{n} != {r}^{n}")));
        }
        let terms = [p.clone(), q.clone(), r.clone()];
        if let Some((i, j)) = first_shared_factor(&terms) {
            return Err(Error::usage(alloc::format!(
                "witness not pairwise coprime: {} and {}",
                terms[i], terms[j]
            )));
        }
        Ok(FermatWitness { p, q, r, n })
    }

    pub fn p(&self) -> &ExactInt {
        &self.p
    }
    pub fn q(&self) -> &ExactInt {
        &self.q
    }
    pub fn r(&self) -> &ExactInt {
        &self.r
    }
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p = q`, which pairwise coprimality only allows as `1^n + 1^n = 2`
    /// at `n = 1`. The cubic then has a double root.
    pub fn is_degenerate(&self) -> bool {
        self.p == self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicConstruction {
    pub poly: MonicIntPoly,
    pub a: ExactInt,
    pub b: ExactInt,
    pub gcd_ab_is_one: bool,
    /// False only for the degenerate witness `p = q`.
    pub distinct_roots: bool,
}

/// `(x - p^n)(x - q^n)(x + r^n)`, whose `x^2` term vanishes and whose
/// constant term is `(pqr)^n`.
pub fn build_cubic(w: &FermatWitness) -> Result<CubicConstruction> {
    let roots = [pow_unchecked(&w.p, w.n), pow_unchecked(&w.q, w.n), -pow_unchecked(&w.r, w.n)];
    let poly = MonicIntPoly::from_roots(&roots)?;
    debug_assert!(poly.coeff(2).is_zero());
    let a = &(&w.p * &w.q) * &w.r;
    let b = poly.coeff(1).clone();
    let gcd_ab_is_one = gcd(&a, &b).is_one();
    Ok(CubicConstruction { poly, a, b, gcd_ab_is_one, distinct_roots: !w.is_degenerate() })
}

/// Why a split-polynomial extraction produced nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum NoIdentity {
    NotFullySplit(SplitType),
    /// A root greater than 1 in absolute value occurs more than once.
    NonDistinctRoots(ExactInt),
    RootSignPattern,
    NotPairwiseCoprime(ExactInt, ExactInt),
    NotPerfectPower(ExactInt),
}

impl NoIdentity {
    pub fn code(&self) -> &'static str {
        match self {
            NoIdentity::NotFullySplit(_) => "not_fully_split",
            NoIdentity::NonDistinctRoots(_) => "non_distinct_roots",
            NoIdentity::RootSignPattern => "root_sign_pattern",
            NoIdentity::NotPairwiseCoprime(..) => "not_pairwise_coprime",
            NoIdentity::NotPerfectPower(_) => "not_perfect_power",
        }
    }
}

/// Outcome of an extraction whose preconditions held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction<T> {
    Found(T),
    Absent(NoIdentity),
}

impl<T> Extraction<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Extraction::Found(t) => Some(t),
            Extraction::Absent(_) => None,
        }
    }
}

/// Shared tail of both extractions: the magnitudes of a fully split root
/// multiset must be pairwise coprime `k`-th powers. Returns their roots.
fn coprime_power_roots(magnitudes: &[ExactInt], k: u32) -> core::result::Result<Vec<ExactInt>, NoIdentity> {
    // a repeated magnitude other than 1 can't be coprime with itself
    for w in magnitudes.windows(2) {
        if w[0] == w[1] && !w[0].is_one() {
            return Err(NoIdentity::NonDistinctRoots(w[0].clone()));
        }
    }
    if let Some((i, j)) = first_shared_factor(magnitudes) {
        return Err(NoIdentity::NotPairwiseCoprime(magnitudes[i].clone(), magnitudes[j].clone()));
    }
    magnitudes
        .iter()
        .map(|m| exact_kth_root(m, k).ok_or_else(|| NoIdentity::NotPerfectPower(m.clone())))
        .collect()
}

/// Recovers `(p, q, r)` from a cubic `x^3 + b x + a^n` that splits over Q.
pub fn extract_fermat_witness(poly: &MonicIntPoly, n: u32) -> Result<Extraction<FermatWitness>> {
    if n == 0 {
        return Err(Error::usage("exponent n must be at least 1"));
    }
    if poly.degree() != 3 || !poly.coeff(2).is_zero() {
        return Err(Error::usage(alloc::format!("{poly} is not of the form x^3 + b*x + c")));
    }
    let a = exact_kth_root(poly.constant(), n)
        .filter(ExactInt::is_positive)
        .ok_or_else(|| Error::usage(alloc::format!("constant term {} is not a^{n} with a > 0", poly.constant())))?;
    // validates b != 0 and gcd(a, b) = 1
    cubic_from_parts(poly.coeff(1), &a, n)?;

    let report = analyze(poly)?;
    if report.split_type != SplitType::FullySplit {
        return Ok(Extraction::Absent(NoIdentity::NotFullySplit(report.split_type)));
    }
    let roots = report.integer_roots;
    let negatives: Vec<_> = roots.iter().filter(|r| r.is_negative()).collect();
    if negatives.len() != 1 || roots.iter().any(ExactInt::is_zero) {
        return Ok(Extraction::Absent(NoIdentity::RootSignPattern));
    }
    let gamma = negatives[0].abs();
    let mut alphas: Vec<ExactInt> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
    alphas.sort();
    let magnitudes = [alphas[0].clone(), alphas[1].clone(), gamma];
    match coprime_power_roots(&magnitudes, n) {
        Ok(pqr) => {
            let [p, q, r]: [ExactInt; 3] = pqr.try_into().expect("three roots");
            Ok(Extraction::Found(FermatWitness::new(p, q, r, n)?))
        }
        Err(why) => Ok(Extraction::Absent(why)),
    }
}

/// Recovers `x_1^k + .. + x_h^k = y_1^k + .. + y_l^k` from a polynomial
/// with vanishing `x^(n-1)` term whose roots are `x_i^k` and `-y_j^k`.
pub fn extract_powersum_identity(poly: &MonicIntPoly, k: u32) -> Result<Extraction<PowerSumInstance>> {
    if k == 0 {
        return Err(Error::usage("exponent k must be at least 1"));
    }
    let n = poly.degree();
    if n < 2 {
        return Err(Error::usage("degree must be at least 2"));
    }
    if !poly.coeff(n - 1).is_zero() {
        return Err(Error::usage(alloc::format!(
            "nonzero x^{} coefficient {}",
            n - 1,
            poly.coeff(n - 1)
        )));
    }
    let (a1, a0) = (poly.coeff(1), poly.constant());
    if a1.is_zero() || a0.is_zero() {
        return Err(Error::usage("hypothesis a1 * a0 != 0 violated"));
    }
    if !gcd(a1, a0).is_one() {
        return Err(Error::usage(alloc::format!("hypothesis gcd(a1, a0) = 1 violated (a1 = {a1}, a0 = {a0})")));
    }
    if exact_kth_root(&a0.abs(), k).is_none() {
        return Err(Error::usage(alloc::format!("hypothesis |a0| = c^{k} violated (a0 = {a0})")));
    }

    let report = analyze(poly)?;
    if report.split_type != SplitType::FullySplit {
        return Ok(Extraction::Absent(NoIdentity::NotFullySplit(report.split_type)));
    }
    let mut positives: Vec<ExactInt> = report.integer_roots.iter().filter(|r| r.is_positive()).cloned().collect();
    let mut negatives: Vec<ExactInt> = report.integer_roots.iter().filter(|r| r.is_negative()).map(ExactInt::abs).collect();
    if positives.is_empty() || negatives.is_empty() {
        return Ok(Extraction::Absent(NoIdentity::RootSignPattern));
    }
    positives.sort();
    negatives.sort();
    let h = positives.len();
    let magnitudes: Vec<ExactInt> = positives.into_iter().chain(negatives).collect();
    match coprime_power_roots(&magnitudes, k) {
        Ok(mut terms) => {
            let rhs = terms.split_off(h);
            let inst = PowerSumInstance::new(k, terms, rhs)?;
            if !inst.is_balanced() {
                return Err(Error::Unverified(alloc::format!("extracted identity {inst} does not balance")));
            }
            Ok(Extraction::Found(inst))
        }
        Err(why) => Ok(Extraction::Absent(why)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CoprimalityReport {
    /// First pair of terms (left side first) sharing a factor, if any.
    pub shared_factor: Option<(ExactInt, ExactInt)>,
    pub a1_a0_coprime: bool,
}

impl CoprimalityReport {
    pub fn terms_pairwise_coprime(&self) -> bool {
        self.shared_factor.is_none()
    }
}

/// The polynomial with roots `x_i^k` and `-y_j^k`. Coprimality is reported,
/// not required.
pub fn build_poly_from_powersum(inst: &PowerSumInstance) -> Result<(MonicIntPoly, CoprimalityReport)> {
    if !inst.is_balanced() {
        return Err(Error::usage(alloc::format!("instance {inst} is not balanced")));
    }
    let k = inst.k();
    let roots: Vec<ExactInt> = inst
        .lhs()
        .iter()
        .map(|x| pow_unchecked(x, k))
        .chain(inst.rhs().iter().map(|y| -pow_unchecked(y, k)))
        .collect();
    let poly = MonicIntPoly::from_roots(&roots)?;
    let terms: Vec<ExactInt> = inst.terms().cloned().collect();
    let shared_factor = first_shared_factor(&terms).map(|(i, j)| (terms[i].clone(), terms[j].clone()));
    let a1_a0_coprime = gcd(poly.coeff(1), poly.constant()).is_one();
    Ok((poly, CoprimalityReport { shared_factor, a1_a0_coprime }))
}
