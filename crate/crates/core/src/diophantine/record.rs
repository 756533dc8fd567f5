use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactmath::{exact_kth_root, gaussian_square_root, pow_unchecked, ExactInt, GaussianInt};
use crate::polysplit::{self, SplitType};
use crate::powersum::PowerSumInstance;

/// The relation a [`SolutionRecord`] claims its variables satisfy. Each
/// variant fixes the variable names and their order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Equation {
    /// `x^n + y^n = z^n`
    Fermat { n: u32 },
    /// `X^n + Y^n = X'^n - Y'^n` and `XY = X'Y'`
    PairSystem { n: u32 },
    /// [`Equation::PairSystem`] with `XY` odd
    PairSystemOddProduct { n: u32 },
    /// `x^n + y^n + z^n = u^n`, optionally with `xy = zu`
    Quadruple { n: u32, xy_eq_zu: bool },
    /// `x1^3 + x2^3 + x3^3 + 3 x4^n = 0` and `(x1 + x2 + x3) x4 = 0`
    Sys3 { n: u32 },
    /// `x1 x2 (x1 + x2) = x3^n`
    ProductForm { n: u32 },
    /// `x1 x2 (x1^2 + x2^2) = x3^2` over Z
    ProductSquares,
    /// `x1 x2 (x1^2 + x2^2) = x3^2` over Z[i], each variable split into re/im
    ProductSquaresGaussian,
    /// `x1 x2 x3 (x1 + x2 + x3) = x4^n`
    EulerProduct { n: u32 },
    /// `(a^n + b^n)^2 + 4 (ab)^n = d^2`: `x^2 + (a^n + b^n) x - (ab)^n` splits
    QuadraticReducible,
    /// `x_1^k + .. + x_h^k = y_1^k + .. + y_l^k`
    EqualSums { k: u32, h: u32, l: u32 },
    /// `x^3 + b x + a^n` has three integer roots
    CubicThreeLinear { n: u32 },
    /// `x^3 + b x + a^n` splits over Q but yields no Fermat witness with `pqr = a`
    CubicSplitWithoutWitness { n: u32 },
    /// the cubic built from a Fermat witness `(p, q, r)` fails to split with
    /// `b != 0` and `gcd(a, b) = 1`
    WitnessCubicFails { n: u32 },
    /// a balanced, pairwise coprime power-sum identity whose polynomial does
    /// not round-trip back to it
    PowerSumRoundtripFails { k: u32, h: u32, l: u32 },
}

fn indexed(prefix: &str, count: u32) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

impl Equation {
    pub fn name(&self) -> &'static str {
        match self {
            Equation::Fermat { .. } => "fermat",
            Equation::PairSystem { .. } => "pair_system",
            Equation::PairSystemOddProduct { .. } => "pair_system_odd_product",
            Equation::Quadruple { .. } => "quadruple",
            Equation::Sys3 { .. } => "sys3",
            Equation::ProductForm { .. } => "product_form",
            Equation::ProductSquares => "product_squares",
            Equation::ProductSquaresGaussian => "product_squares_zi",
            Equation::EulerProduct { .. } => "euler_product",
            Equation::QuadraticReducible => "quadratic_reducible",
            Equation::EqualSums { .. } => "equal_sums",
            Equation::CubicThreeLinear { .. } => "cubic_three_linear",
            Equation::CubicSplitWithoutWitness { .. } => "cubic_split_without_witness",
            Equation::WitnessCubicFails { .. } => "witness_cubic_fails",
            Equation::PowerSumRoundtripFails { .. } => "powersum_roundtrip_fails",
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        let fixed: &[&str] = match self {
            Equation::Fermat { .. } => &["x", "y", "z"],
            Equation::PairSystem { .. } | Equation::PairSystemOddProduct { .. } => &["X", "Y", "Xp", "Yp"],
            Equation::Quadruple { .. } => &["x", "y", "z", "u"],
            Equation::Sys3 { .. } => &["x1", "x2", "x3", "x4"],
            Equation::ProductForm { .. } | Equation::ProductSquares => &["x1", "x2", "x3"],
            Equation::ProductSquaresGaussian => &["x1_re", "x1_im", "x2_re", "x2_im", "x3_re", "x3_im"],
            Equation::EulerProduct { .. } => &["x1", "x2", "x3", "x4"],
            Equation::QuadraticReducible => &["a", "b", "n", "d"],
            Equation::CubicThreeLinear { .. } | Equation::CubicSplitWithoutWitness { .. } => &["a", "b"],
            Equation::WitnessCubicFails { .. } => &["p", "q", "r"],
            Equation::EqualSums { h, l, .. } | Equation::PowerSumRoundtripFails { h, l, .. } => {
                return indexed("x", *h).chain(indexed("y", *l)).collect();
            }
        };
        fixed.iter().map(|s| s.to_string()).collect()
    }

    /// Substitutes `values` (in [`Equation::var_names`] order) and evaluates
    /// the relation exactly.
    pub fn holds(&self, v: &[ExactInt]) -> Result<bool> {
        let p = |b: &ExactInt, e: u32| pow_unchecked(b, e);
        Ok(match *self {
            Equation::Fermat { n } => p(&v[0], n) + p(&v[1], n) == p(&v[2], n),
            Equation::PairSystem { n } => {
                p(&v[0], n) + p(&v[1], n) == p(&v[2], n) - p(&v[3], n) && &v[0] * &v[1] == &v[2] * &v[3]
            }
            Equation::PairSystemOddProduct { n } => {
                !(&v[0] * &v[1]).is_even() && Equation::PairSystem { n }.holds(v)?
            }
            Equation::Quadruple { n, xy_eq_zu } => {
                p(&v[0], n) + p(&v[1], n) + p(&v[2], n) == p(&v[3], n)
                    && (!xy_eq_zu || &v[0] * &v[1] == &v[2] * &v[3])
            }
            Equation::Sys3 { n } => {
                let cubes = p(&v[0], 3) + p(&v[1], 3) + p(&v[2], 3);
                let first = cubes + ExactInt::from(3) * p(&v[3], n);
                let sum = &v[0] + &v[1] + &v[2];
                first.is_zero() && (sum * &v[3]).is_zero()
            }
            Equation::ProductForm { n } => &v[0] * &v[1] * (&v[0] + &v[1]) == p(&v[2], n),
            Equation::ProductSquares => {
                &v[0] * &v[1] * (p(&v[0], 2) + p(&v[1], 2)) == p(&v[2], 2)
            }
            Equation::ProductSquaresGaussian => {
                let g = |i: usize| GaussianInt::new(v[i].clone(), v[i + 1].clone());
                let (x1, x2, x3) = (g(0), g(2), g(4));
                let prod = &(&x1 * &x2) * &(&x1.square() + &x2.square());
                prod == x3.square()
            }
            Equation::EulerProduct { n } => {
                &v[0] * &v[1] * &v[2] * (&v[0] + &v[1] + &v[2]) == p(&v[3], n)
            }
            Equation::QuadraticReducible => {
                let n = v[2].to_u64().and_then(|n| u32::try_from(n).ok()).filter(|&n| n > 0);
                let Some(n) = n else { return Ok(false) };
                let s = p(&v[0], n) + p(&v[1], n);
                p(&s, 2) + ExactInt::from(4) * p(&(&v[0] * &v[1]), n) == p(&v[3], 2)
            }
            Equation::EqualSums { k, h, .. } => {
                let (l, r) = v.split_at(h as usize);
                l.iter().map(|x| p(x, k)).sum::<ExactInt>() == r.iter().map(|y| p(y, k)).sum::<ExactInt>()
            }
            Equation::CubicThreeLinear { n } => {
                polysplit::classify_cubic(&v[1], &v[0], n)? == polysplit::CubicClass::ThreeLinear
            }
            Equation::CubicSplitWithoutWitness { n } => {
                let poly = polysplit::cubic_from_parts(&v[1], &v[0], n)?;
                if polysplit::analyze(&poly)?.split_type != SplitType::FullySplit {
                    return Ok(false);
                }
                match polysplit::extract_fermat_witness(&poly, n)?.found() {
                    None => true,
                    Some(w) => &(w.p() * w.q()) * w.r() != v[0],
                }
            }
            Equation::WitnessCubicFails { n } => {
                let Ok(w) = polysplit::FermatWitness::new(v[0].clone(), v[1].clone(), v[2].clone(), n) else {
                    return Ok(false);
                };
                let c = polysplit::build_cubic(&w)?;
                c.b.is_zero()
                    || !c.gcd_ab_is_one
                    || polysplit::analyze(&c.poly)?.split_type != SplitType::FullySplit
            }
            Equation::PowerSumRoundtripFails { k, h, .. } => {
                let (l, r) = v.split_at(h as usize);
                let inst = PowerSumInstance::new(k, l.to_vec(), r.to_vec())?;
                if !inst.is_balanced() {
                    return Ok(false);
                }
                let (poly, report) = polysplit::build_poly_from_powersum(&inst)?;
                if report.terms_pairwise_coprime() != report.a1_a0_coprime {
                    return Ok(true);
                }
                if !report.terms_pairwise_coprime() {
                    return Ok(false);
                }
                polysplit::extract_powersum_identity(&poly, k)?.found().as_ref() != Some(&inst)
            }
        })
    }
}

/// One verified solution of a searched relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawRecord"))]
pub struct SolutionRecord {
    id: String,
    equation: Equation,
    vars: Vec<(String, ExactInt)>,
    constraints: Vec<String>,
}

impl SolutionRecord {
    /// Builds the record and re-verifies it by direct substitution.
    pub fn new(
        id: impl Into<String>,
        equation: Equation,
        values: Vec<ExactInt>,
        constraints: &[&str],
    ) -> Result<Self> {
        let names = equation.var_names();
        if names.len() != values.len() {
            return Err(Error::Unverified(format!(
                "{} takes {} variables, got {}",
                equation.name(),
                names.len(),
                values.len()
            )));
        }
        if !equation.holds(&values)? {
            return Err(Error::Unverified(format!("{} does not hold at {values:?}", equation.name())));
        }
        Ok(SolutionRecord {
            id: id.into(),
            equation,
            vars: names.into_iter().zip(values).collect(),
            constraints: constraints.iter().map(|c| c.to_string()).collect(),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn equation(&self) -> Equation {
        self.equation
    }

    pub fn vars(&self) -> &[(String, ExactInt)] {
        &self.vars
    }

    pub fn values(&self) -> impl Iterator<Item = &ExactInt> {
        self.vars.iter().map(|(_, v)| v)
    }

    pub fn get(&self, name: &str) -> Option<&ExactInt> {
        self.vars.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn constraints(&self) -> &[String] {
        &self.constraints
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Re-runs the substitution check.
    pub fn reverify(&self) -> Result<bool> {
        let values: Vec<ExactInt> = self.values().cloned().collect();
        self.equation.holds(&values)
    }
}

impl Ord for SolutionRecord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.values()
            .cmp(other.values())
            .then_with(|| self.id.cmp(&other.id))
            .then_with(|| self.equation.name().cmp(other.equation.name()))
            .then_with(|| self.constraints.cmp(&other.constraints))
    }
}

impl PartialOrd for SolutionRecord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawRecord {
    id: String,
    equation: Equation,
    vars: Vec<(String, ExactInt)>,
    constraints: Vec<String>,
}

#[cfg(feature = "serde")]
impl TryFrom<RawRecord> for SolutionRecord {
    type Error = Error;

    fn try_from(raw: RawRecord) -> Result<Self> {
        let names: Vec<String> = raw.vars.iter().map(|(n, _)| n.clone()).collect();
        if names != raw.equation.var_names() {
            return Err(Error::Unverified(format!("unexpected variable names {names:?}")));
        }
        let constraints: Vec<&str> = raw.constraints.iter().map(String::as_str).collect();
        SolutionRecord::new(raw.id, raw.equation, raw.vars.into_iter().map(|(_, v)| v).collect(), &constraints)
    }
}

/// Exact `n`-th root helper shared by the searches.
pub(crate) fn nth_root(v: &ExactInt, n: u32) -> Option<ExactInt> {
    exact_kth_root(v, n)
}

pub(crate) fn gaussian_root(z: &GaussianInt) -> Result<Option<GaussianInt>> {
    gaussian_square_root(z)
}
