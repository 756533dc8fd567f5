use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::exactmath::{
    coprime, factorize, first_shared_factor, gaussian_coprime, pow_unchecked, ExactInt, GaussianInt,
};

use super::record::{gaussian_root, nth_root};
use super::{Equation, Partial, RangeSearch, SearchBounds, SolutionRecord};

fn int(v: u64) -> ExactInt {
    ExactInt::from(v)
}

fn pairwise(xs: &[ExactInt]) -> bool {
    first_shared_factor(xs).is_none()
}

/// `x^n + y^n = z^n` with `x <= y < z <= max`.
#[derive(Debug, Clone)]
pub struct FermatTriples {
    pub bounds: SearchBounds,
    pub primitive_only: bool,
}

impl RangeSearch for FermatTriples {
    fn outer_len(&self) -> u64 {
        self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let (m, n) = (self.bounds.per_var_max, self.bounds.exponent);
        let eq = Equation::Fermat { n };
        let bound = int(m);
        let mut out = Partial::default();
        for x in range.start + 1..=range.end {
            let xn = pow_unchecked(&int(x), n);
            for y in x..=m {
                out.candidates += 1;
                let s = &xn + pow_unchecked(&int(y), n);
                let Some(z) = nth_root(&s, n) else { continue };
                if z > bound {
                    continue;
                }
                let vals = vec![int(x), int(y), z];
                if self.primitive_only {
                    if !pairwise(&vals) {
                        out.filtered += 1;
                        continue;
                    }
                    out.records.push(SolutionRecord::new("fermat", eq, vals, &["pairwise_coprime"])?);
                } else {
                    out.records.push(SolutionRecord::new("fermat", eq, vals, &[])?);
                }
            }
        }
        Ok(out)
    }
}

/// Coprimality requirement for [`Quadruple`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum QuadrupleMode {
    /// `gcd(x, y) = gcd(z, u) = 1`
    PairsXyZu,
    /// all six pairs coprime
    FullyPairwise,
}

/// `x^n + y^n + z^n = u^n`, optionally with `xy = zu`.
///
/// Canonical order is `x <= y`; without the `xy = zu` side condition under
/// [`QuadrupleMode::FullyPairwise`] the relation is symmetric in `x, y, z`, so
/// `x <= y <= z` is required instead.
#[derive(Debug, Clone)]
pub struct Quadruple {
    pub bounds: SearchBounds,
    pub mode: QuadrupleMode,
    pub require_xy_eq_zu: bool,
}

impl Quadruple {
    fn symmetric_in_z(&self) -> bool {
        !self.require_xy_eq_zu && self.mode == QuadrupleMode::FullyPairwise
    }
}

impl RangeSearch for Quadruple {
    fn outer_len(&self) -> u64 {
        self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let (m, n) = (self.bounds.per_var_max, self.bounds.exponent);
        let eq = Equation::Quadruple { n, xy_eq_zu: self.require_xy_eq_zu };
        let bound = int(m);
        let powers: Vec<ExactInt> = (0..=m).map(|v| pow_unchecked(&int(v), n)).collect();
        let mut out = Partial::default();
        for x in range.start + 1..=range.end {
            for y in x..=m {
                let xy = &powers[x as usize] + &powers[y as usize];
                for z in 1..=m {
                    out.candidates += 1;
                    if self.symmetric_in_z() && z < y {
                        continue;
                    }
                    let s = &xy + &powers[z as usize];
                    let Some(u) = nth_root(&s, n) else { continue };
                    if u > bound {
                        continue;
                    }
                    if self.require_xy_eq_zu && int(x * y) != &int(z) * &u {
                        continue;
                    }
                    let vals = vec![int(x), int(y), int(z), u];
                    let (ok, tag): (bool, &[&str]) = match self.mode {
                        QuadrupleMode::PairsXyZu => (
                            coprime(&vals[0], &vals[1]) && coprime(&vals[2], &vals[3]),
                            &["gcd(x,y)=1", "gcd(z,u)=1"],
                        ),
                        QuadrupleMode::FullyPairwise => (pairwise(&vals), &["pairwise_coprime"]),
                    };
                    if !ok {
                        out.filtered += 1;
                        continue;
                    }
                    let mut tags = tag.to_vec();
                    if self.require_xy_eq_zu {
                        tags.push("xy=zu");
                    }
                    out.records.push(SolutionRecord::new("quadruple", eq, vals, &tags)?);
                }
            }
        }
        Ok(out)
    }
}

/// `x1 x2 (x1 + x2) = x3^n` over coprime `0 < x1 < x2 <= max`.
#[derive(Debug, Clone)]
pub struct ProductForm {
    pub bounds: SearchBounds,
}

impl RangeSearch for ProductForm {
    fn outer_len(&self) -> u64 {
        self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let (m, n) = (self.bounds.per_var_max, self.bounds.exponent);
        let eq = Equation::ProductForm { n };
        let mut out = Partial::default();
        for x1 in range.start + 1..=range.end {
            for x2 in x1 + 1..=m {
                out.candidates += 1;
                let prod = int(x1) * int(x2) * int(x1 + x2);
                let Some(x3) = nth_root(&prod, n) else { continue };
                if !coprime(&int(x1), &int(x2)) {
                    out.filtered += 1;
                    continue;
                }
                let rec = SolutionRecord::new("product_form", eq, vec![int(x1), int(x2), x3], &["gcd(x1,x2)=1"])?;
                out.records.push(rec);
            }
        }
        Ok(out)
    }
}

/// Ring for [`ProductSquares`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Ring {
    Z,
    GaussianZ,
}

/// `x1 x2 (x1^2 + x2^2) = x3^2` with `x3 != 0`.
///
/// Over Z: coprime `0 < x1 < x2 <= max`. Over Z[i]: `max` bounds the norms
/// of `x1, x2`, and pairs are taken up to the symmetries of the relation:
/// `(x1, x2) -> (u x1, ±u x2)` for units `u`, and swapping. The
/// representative has `x1` in the first quadrant (`re > 0, im >= 0`) and
/// `x2` in the right half plane (`re > 0`, or `re = 0, im > 0`); of the
/// two representatives reachable with and without the swap, the
/// lexicographically smaller is kept. `x3` is reported as the root lying in
/// the right half plane.
#[derive(Debug, Clone)]
pub struct ProductSquares {
    pub max: u64,
    pub ring: Ring,
    quadrant: Vec<GaussianInt>,
    half_plane: Vec<GaussianInt>,
}

fn in_half_plane(z: &GaussianInt) -> bool {
    z.re.is_positive() || (z.re.is_zero() && z.im.is_positive())
}

fn gaussian_key(z: &GaussianInt) -> (ExactInt, ExactInt) {
    (z.re.clone(), z.im.clone())
}

/// Moves `a` to the first quadrant with unit `u` and `b` to the half plane
/// with `±u`.
fn normalize_pair(a: &GaussianInt, b: &GaussianInt) -> (GaussianInt, GaussianInt) {
    let u = a.normalizing_unit().expect("nonzero");
    let a2 = a * &u;
    let b2 = b * &u;
    let b2 = if in_half_plane(&b2) { b2 } else { -&b2 };
    (a2, b2)
}

/// Canonical representative of `(x1, x2)` under units and swapping.
pub fn canonical_gaussian_pair(x1: &GaussianInt, x2: &GaussianInt) -> (GaussianInt, GaussianInt) {
    let p = normalize_pair(x1, x2);
    let q = normalize_pair(x2, x1);
    let key = |(a, b): &(GaussianInt, GaussianInt)| (gaussian_key(a), gaussian_key(b));
    if key(&q) < key(&p) { q } else { p }
}

impl ProductSquares {
    pub fn new(max: u64, ring: Ring) -> Result<Self> {
        if max == 0 {
            return Err(Error::usage("bound must be at least 1"));
        }
        let (mut quadrant, mut half_plane) = (Vec::new(), Vec::new());
        if ring == Ring::GaussianZ {
            let r = isqrt(max) as i64;
            for re in -r..=r {
                for im in -r..=r {
                    let norm = (re * re + im * im) as u64;
                    if norm == 0 || norm > max {
                        continue;
                    }
                    let z = GaussianInt::new(re, im);
                    if re > 0 && im >= 0 {
                        quadrant.push(z.clone());
                    }
                    if in_half_plane(&z) {
                        half_plane.push(z);
                    }
                }
            }
        }
        Ok(ProductSquares { max, ring, quadrant, half_plane })
    }

    fn run_z(&self, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        for x1 in range.start + 1..=range.end {
            for x2 in x1 + 1..=self.max {
                out.candidates += 1;
                let prod = int(x1) * int(x2) * int(x1 * x1 + x2 * x2);
                let Some(x3) = nth_root(&prod, 2) else { continue };
                if !coprime(&int(x1), &int(x2)) {
                    out.filtered += 1;
                    continue;
                }
                let vals = vec![int(x1), int(x2), x3];
                out.records.push(SolutionRecord::new("product_squares", Equation::ProductSquares, vals, &["gcd(x1,x2)=1"])?);
            }
        }
        Ok(out)
    }

    fn run_gaussian(&self, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        for x1 in &self.quadrant[range.start as usize..range.end as usize] {
            for x2 in &self.half_plane {
                out.candidates += 1;
                if canonical_gaussian_pair(x1, x2) != (x1.clone(), x2.clone()) {
                    continue;
                }
                let prod = &(x1 * x2) * &(&x1.square() + &x2.square());
                if prod.is_zero() || nth_root(&prod.norm(), 2).is_none() {
                    continue;
                }
                let Some(w) = gaussian_root(&prod)? else { continue };
                if !gaussian_coprime(x1, x2) {
                    out.filtered += 1;
                    continue;
                }
                let x3 = if in_half_plane(&w) { w } else { -&w };
                let vals = vec![
                    x1.re.clone(), x1.im.clone(), x2.re.clone(), x2.im.clone(), x3.re, x3.im,
                ];
                out.records.push(SolutionRecord::new(
                    "product_squares_zi",
                    Equation::ProductSquaresGaussian,
                    vals,
                    &["gcd(x1,x2)=1"],
                )?);
            }
        }
        Ok(out)
    }
}

impl RangeSearch for ProductSquares {
    fn outer_len(&self) -> u64 {
        match self.ring {
            Ring::Z => self.max,
            Ring::GaussianZ => self.quadrant.len() as u64,
        }
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        match self.ring {
            Ring::Z => self.run_z(range),
            Ring::GaussianZ => self.run_gaussian(range),
        }
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `x1 x2 x3 (x1 + x2 + x3) = x4^n` over `x1 < x2 < x3 <= max` with
/// `{x1, x2, x3, x1 + x2 + x3}` pairwise coprime.
#[derive(Debug, Clone)]
pub struct EulerProduct {
    pub bounds: SearchBounds,
}

impl RangeSearch for EulerProduct {
    fn outer_len(&self) -> u64 {
        self.bounds.per_var_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let (m, n) = (self.bounds.per_var_max, self.bounds.exponent);
        let eq = Equation::EulerProduct { n };
        let mut out = Partial::default();
        for x1 in range.start + 1..=range.end {
            for x2 in x1 + 1..=m {
                for x3 in x2 + 1..=m {
                    out.candidates += 1;
                    let terms = [int(x1), int(x2), int(x3), int(x1 + x2 + x3)];
                    let prod: ExactInt = terms.iter().cloned().product();
                    let Some(x4) = nth_root(&prod, n) else { continue };
                    if !pairwise(&terms) {
                        out.filtered += 1;
                        continue;
                    }
                    let vals = vec![int(x1), int(x2), int(x3), x4];
                    out.records.push(SolutionRecord::new("euler_product", eq, vals, &["pairwise_coprime(x1,x2,x3,x1+x2+x3)"])?);
                }
            }
        }
        Ok(out)
    }
}

/// `x^2 + (a^n + b^n) x - (ab)^n` over coprime `a < b <= a_max`,
/// `1 <= n <= n_max`; reports the reducible ones.
#[derive(Debug, Clone)]
pub struct QuadraticScan {
    pub a_max: u64,
    pub n_max: u32,
}

impl QuadraticScan {
    pub fn new(a_max: u64, n_max: u32) -> Result<Self> {
        if a_max == 0 || n_max == 0 {
            return Err(Error::usage("a_max and n_max must be at least 1"));
        }
        Ok(QuadraticScan { a_max, n_max })
    }
}

impl RangeSearch for QuadraticScan {
    fn outer_len(&self) -> u64 {
        self.a_max
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        for a in range.start + 1..=range.end {
            for b in a + 1..=self.a_max {
                for n in 1..=self.n_max {
                    out.candidates += 1;
                    let (ea, eb) = (int(a), int(b));
                    let s = pow_unchecked(&ea, n) + pow_unchecked(&eb, n);
                    let disc = pow_unchecked(&s, 2) + int(4) * pow_unchecked(&(&ea * &eb), n);
                    let Some(d) = nth_root(&disc, 2) else { continue };
                    if !coprime(&ea, &eb) {
                        out.filtered += 1;
                        continue;
                    }
                    let vals = vec![ea, eb, int(u64::from(n)), d];
                    out.records.push(SolutionRecord::new("quadratic", Equation::QuadraticReducible, vals, &["gcd(a,b)=1"])?);
                }
            }
        }
        Ok(out)
    }
}

pub fn search_fermat_triples(b: SearchBounds, primitive_only: bool) -> Result<Vec<SolutionRecord>> {
    Ok(FermatTriples { bounds: b, primitive_only }.run()?.records)
}

pub fn search_quadruple(b: SearchBounds, mode: QuadrupleMode, require_xy_eq_zu: bool) -> Result<Vec<SolutionRecord>> {
    Ok(Quadruple { bounds: b, mode, require_xy_eq_zu }.run()?.records)
}

pub fn search_product_form(n: u32, max: u64) -> Result<Vec<SolutionRecord>> {
    Ok(ProductForm { bounds: SearchBounds::new(max, n)? }.run()?.records)
}

pub fn search_product_squares(max: u64, ring: Ring) -> Result<Vec<SolutionRecord>> {
    Ok(ProductSquares::new(max, ring)?.run()?.records)
}

pub fn search_euler_product(n: u32, max: u64) -> Result<Vec<SolutionRecord>> {
    Ok(EulerProduct { bounds: SearchBounds::new(max, n)? }.run()?.records)
}

pub fn search_quadratic_irreducibility(a_max: u64, n_max: u32) -> Result<Vec<SolutionRecord>> {
    Ok(QuadraticScan::new(a_max, n_max)?.run()?.records)
}

/// Unitary splittings `(d, n / d)` of `n = x * y` for coprime `x, y`.
pub(crate) fn coprime_splittings(x: &ExactInt, y: &ExactInt) -> Result<Vec<(ExactInt, ExactInt)>> {
    let mut prime_powers = Vec::new();
    for v in [x, y] {
        if v.is_one() {
            continue;
        }
        for (p, e) in factorize(v)?.factors {
            prime_powers.push(pow_unchecked(&p, e));
        }
    }
    let total = x * y;
    let mut divisors = vec![ExactInt::ONE];
    for pp in &prime_powers {
        let more: Vec<ExactInt> = divisors.iter().map(|d| d * pp).collect();
        divisors.extend(more);
    }
    divisors.sort();
    Ok(divisors
        .into_iter()
        .map(|d| {
            let q = total.checked_exact_div(&d).expect("unitary divisor");
            (d, q)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(r: &SolutionRecord) -> Vec<i128> {
        r.values().map(|v| v.as_i128().unwrap()).collect()
    }

    fn all(rs: &[SolutionRecord]) -> Vec<Vec<i128>> {
        rs.iter().map(vals).collect()
    }

    #[test]
    fn pythagorean_primitive_to_30() {
        let rs = search_fermat_triples(SearchBounds::new(30, 2).unwrap(), true).unwrap();
        assert_eq!(
            all(&rs),
            vec![vec![3, 4, 5], vec![5, 12, 13], vec![7, 24, 25], vec![8, 15, 17], vec![20, 21, 29]]
        );
        let rs = search_fermat_triples(SearchBounds::new(10, 2).unwrap(), false).unwrap();
        assert_eq!(all(&rs), vec![vec![3, 4, 5], vec![6, 8, 10]]);
        assert!(search_fermat_triples(SearchBounds::new(100, 3).unwrap(), false).unwrap().is_empty());
    }

    #[test]
    fn quadruple_examples() {
        let b = SearchBounds::new(50, 2).unwrap();
        assert!(search_quadruple(b, QuadrupleMode::PairsXyZu, true).unwrap().is_empty());
        let b = SearchBounds::new(10, 2).unwrap();
        let rs = search_quadruple(b, QuadrupleMode::PairsXyZu, false).unwrap();
        assert!(all(&rs).contains(&vec![1, 2, 2, 3]));
        let b = SearchBounds::new(60, 3).unwrap();
        let rs = search_quadruple(b, QuadrupleMode::PairsXyZu, false).unwrap();
        assert!(all(&rs).contains(&vec![1, 6, 8, 9]));
        // gcd(6, 8) = 2, so the fully pairwise search must not report it
        let rs = search_quadruple(b, QuadrupleMode::FullyPairwise, false).unwrap();
        assert!(!all(&rs).contains(&vec![1, 6, 8, 9]));
    }

    #[test]
    fn product_forms() {
        assert!(all(&search_product_form(2, 20).unwrap()).contains(&vec![9, 16, 60]));
        assert!(search_product_form(3, 200).unwrap().is_empty());
        assert!(search_product_form(4, 200).unwrap().is_empty());
        assert!(search_product_squares(300, Ring::Z).unwrap().is_empty());
        assert!(search_product_squares(5, Ring::Z).unwrap().is_empty());
        assert!(search_product_squares(50, Ring::GaussianZ).unwrap().is_empty());
    }

    #[test]
    fn euler_product_examples() {
        assert!(search_euler_product(4, 60).unwrap().is_empty());
        assert!(all(&search_euler_product(1, 10).unwrap()).contains(&vec![1, 5, 7, 455]));
    }

    #[test]
    fn quadratic_scan() {
        let rs = search_quadratic_irreducibility(20, 6).unwrap();
        assert!(all(&rs).contains(&vec![2, 3, 1, 7]));
        assert!(!all(&rs).iter().any(|v| v[0] == 1 && v[1] == 2 && v[2] == 1));
        for r in &rs {
            let v = vals(r);
            assert_eq!(v[2], 1);
            assert_eq!((v[0] * v[1]) % 2, 0);
        }
    }

    #[test]
    fn gaussian_canonical_pairs() {
        let x1 = GaussianInt::new(1, 2);
        let x2 = GaussianInt::new(-3, 1);
        let c = canonical_gaussian_pair(&x1, &x2);
        for u in GaussianInt::units() {
            for s in [GaussianInt::one(), -&GaussianInt::one()] {
                let a = &x1 * &u;
                let b = &(&x2 * &u) * &s;
                assert_eq!(canonical_gaussian_pair(&a, &b), c);
                assert_eq!(canonical_gaussian_pair(&b, &a), c);
            }
        }
    }

    #[test]
    fn gaussian_candidate_count() {
        // Q = sum_j floor(N/(4j+1)) - floor(N/(4j+3))
        for n in [1u64, 2, 5, 20, 50] {
            let s = ProductSquares::new(n, Ring::GaussianZ).unwrap();
            let q: u64 = (0..=n / 4).map(|j| n / (4 * j + 1) - n / (4 * j + 3)).sum();
            assert_eq!(s.outer_len(), q);
            assert_eq!(s.run().unwrap().candidates, q * 2 * q);
        }
    }

    #[test]
    fn splittings() {
        let s = coprime_splittings(&int(12), &int(5)).unwrap();
        let got: Vec<(i128, i128)> = s.iter().map(|(a, b)| (a.as_i128().unwrap(), b.as_i128().unwrap())).collect();
        assert_eq!(got, vec![(1, 60), (3, 20), (4, 15), (5, 12), (12, 5), (15, 4), (20, 3), (60, 1)]);
    }
}
