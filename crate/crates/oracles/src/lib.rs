//! Brute-force reference enumerations in plain `i128`.
//!
//! Deliberately naive: nested loops over every variable, roots by binary
//! search, gcd by Euclid. Nothing here is shared with `flt-lab-core`.

use std::collections::BTreeSet;

/// Solutions (variables in record order, sorted, deduplicated) and the
/// number of solutions rejected by the coprimality requirement.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Found {
    pub solutions: Vec<Vec<i128>>,
    pub rejected: usize,
}

impl Found {
    fn from_set(set: BTreeSet<Vec<i128>>, rejected: usize) -> Self {
        Found { solutions: set.into_iter().collect(), rejected }
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn all_coprime(xs: &[i128]) -> bool {
    (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| gcd(xs[i], xs[j]) == 1))
}

pub fn ipow(b: i128, e: u32) -> i128 {
    (0..e).fold(1i128, |acc, _| acc * b)
}

/// Nonnegative `r` with `r^n = v`, by binary search.
pub fn exact_root(v: i128, n: u32) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let (mut lo, mut hi) = (0i128, 1i128);
    while ipow_sat(hi, n) <= v {
        hi *= 2;
    }
    while lo < hi {
        let mid = (lo + hi) / 2;
        if ipow_sat(mid, n) < v {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (ipow_sat(lo, n) == v).then_some(lo)
}

fn ipow_sat(b: i128, e: u32) -> i128 {
    (0..e).fold(1i128, |acc, _| acc.saturating_mul(b))
}

/// `x^n + y^n = z^n`, `x <= y`, all `<= max`.
pub fn fermat(n: u32, max: i128, primitive: bool) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x in 1..=max {
        for y in x..=max {
            for z in 1..=max {
                if ipow(x, n) + ipow(y, n) == ipow(z, n) {
                    if primitive && !all_coprime(&[x, y, z]) {
                        rejected += 1;
                    } else {
                        set.insert(vec![x, y, z]);
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

/// `X^n + Y^n = X'^n - Y'^n`, `XY = X'Y'`, coprime pairs, `X <= Y`.
pub fn pair_system(n: u32, max: i128) -> Found {
    let mut set = BTreeSet::new();
    for x in 1..=max {
        for y in x..=max {
            for xp in 1..=max {
                for yp in 1..=max {
                    if x * y == xp * yp
                        && gcd(x, y) == 1
                        && gcd(xp, yp) == 1
                        && ipow(x, n) + ipow(y, n) == ipow(xp, n) - ipow(yp, n)
                    {
                        set.insert(vec![x, y, xp, yp]);
                    }
                }
            }
        }
    }
    Found::from_set(set, 0)
}

/// `x^n + y^n + z^n = u^n`. `fully_pairwise` selects all six gcds instead of
/// `gcd(x, y) = gcd(z, u) = 1`. Canonical `x <= y`, plus `y <= z` when the
/// relation is symmetric in `x, y, z`.
pub fn quadruple(n: u32, max: i128, fully_pairwise: bool, xy_eq_zu: bool) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x in 1..=max {
        for y in x..=max {
            for z in 1..=max {
                if fully_pairwise && !xy_eq_zu && z < y {
                    continue;
                }
                for u in 1..=max {
                    if ipow(x, n) + ipow(y, n) + ipow(z, n) != ipow(u, n) {
                        continue;
                    }
                    if xy_eq_zu && x * y != z * u {
                        continue;
                    }
                    let ok = if fully_pairwise {
                        all_coprime(&[x, y, z, u])
                    } else {
                        gcd(x, y) == 1 && gcd(z, u) == 1
                    };
                    if ok {
                        set.insert(vec![x, y, z, u]);
                    } else {
                        rejected += 1;
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

/// Orders a triple so the two entries sharing a sign come first (ascending
/// by absolute value) and the other-sign entry is last; single-sign triples
/// are sorted by absolute value.
pub fn sys3_canonical(mut t: [i128; 3]) -> [i128; 3] {
    let negatives = t.iter().filter(|v| **v < 0).count();
    if negatives == 0 || negatives == 3 {
        t.sort_by_key(|v| v.abs());
        return t;
    }
    let lone_negative = negatives == 1;
    let lone = t.iter().position(|v| (*v < 0) == lone_negative).unwrap();
    let mut pair: Vec<i128> = (0..3).filter(|&i| i != lone).map(|i| t[i]).collect();
    pair.sort_by_key(|v| v.abs());
    [pair[0], pair[1], t[lone]]
}

/// Both equations of the cubic system over nonzero `x1, x2, x3` in
/// `[-max, max]` and any `x4` in `[-max, max]`.
pub fn sys3(n: u32, max: i128) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), BTreeSet::new());
    let nonzero: Vec<i128> = (-max..=max).filter(|&v| v != 0).collect();
    for &x1 in &nonzero {
        for &x2 in &nonzero {
            for &x3 in &nonzero {
                let cubes = ipow(x1, 3) + ipow(x2, 3) + ipow(x3, 3);
                for x4 in -max..=max {
                    if cubes + 3 * ipow(x4, n) != 0 || (x1 + x2 + x3) * x4 != 0 {
                        continue;
                    }
                    let [a, b, c] = sys3_canonical([x1, x2, x3]);
                    if all_coprime(&[x1, x2, x3]) {
                        set.insert(vec![a, b, c, x4]);
                    } else {
                        rejected.insert(vec![a, b, c, x4]);
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected.len())
}

/// `x1 x2 (x1 + x2) = x3^n` over `x1 < x2 <= max`, coprime.
pub fn product_form(n: u32, max: i128) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x1 in 1..=max {
        for x2 in x1 + 1..=max {
            if let Some(x3) = exact_root(x1 * x2 * (x1 + x2), n) {
                if gcd(x1, x2) == 1 {
                    set.insert(vec![x1, x2, x3]);
                } else {
                    rejected += 1;
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

/// `x1 x2 (x1^2 + x2^2) = x3^2` over `x1 < x2 <= max`, coprime.
pub fn product_squares(max: i128) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x1 in 1..=max {
        for x2 in x1 + 1..=max {
            if let Some(x3) = exact_root(x1 * x2 * (x1 * x1 + x2 * x2), 2) {
                if gcd(x1, x2) == 1 {
                    set.insert(vec![x1, x2, x3]);
                } else {
                    rejected += 1;
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

type G = (i128, i128);

fn gmul(a: G, b: G) -> G {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn gadd(a: G, b: G) -> G {
    (a.0 + b.0, a.1 + b.1)
}

fn gnorm(a: G) -> i128 {
    a.0 * a.0 + a.1 * a.1
}

/// Exact quotient `a / b`, if any.
fn gdiv(a: G, b: G) -> Option<G> {
    let n = gnorm(b);
    let num = gmul(a, (b.0, -b.1));
    (num.0 % n == 0 && num.1 % n == 0).then(|| (num.0 / n, num.1 / n))
}

/// Coprime in Z[i]: no common divisor of norm > 1. Checked by trying every
/// Gaussian integer whose norm divides both norms.
fn gcoprime(a: G, b: G) -> bool {
    let g = gcd(gnorm(a), gnorm(b));
    if g == 1 {
        return true;
    }
    let r = (g as f64).sqrt() as i128 + 1;
    for re in -r..=r {
        for im in -r..=r {
            let d = (re, im);
            let nd = gnorm(d);
            if nd > 1 && g % nd == 0 && gdiv(a, d).is_some() && gdiv(b, d).is_some() {
                return false;
            }
        }
    }
    true
}

fn in_quadrant(a: G) -> bool {
    a.0 > 0 && a.1 >= 0
}

fn in_half(a: G) -> bool {
    a.0 > 0 || (a.0 == 0 && a.1 > 0)
}

const UNITS: [G; 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

/// Smallest image of `(x1, x2)` with `x1` in the first quadrant and `x2` in
/// the right half plane, over `(u x1, s u x2)`, `s = ±1`, and swapping.
pub fn gaussian_pair_canonical(x1: G, x2: G) -> (G, G) {
    let mut best: Option<(G, G)> = None;
    for (a, b) in [(x1, x2), (x2, x1)] {
        for u in UNITS {
            for s in [1, -1] {
                let img = (gmul(a, u), gmul(gmul(b, u), (s, 0)));
                if in_quadrant(img.0) && in_half(img.1) && best.is_none_or(|c| img < c) {
                    best = Some(img);
                }
            }
        }
    }
    best.unwrap()
}

/// Gaussian solutions with `1 <= N(x1), N(x2) <= norm_max`, `x3 != 0`,
/// reported as `[x1.re, x1.im, x2.re, x2.im, x3.re, x3.im]` with `x3` in the
/// right half plane.
pub fn product_squares_gaussian(norm_max: i128) -> Found {
    let r = (norm_max as f64).sqrt() as i128 + 1;
    let ball: Vec<G> = (-r..=r)
        .flat_map(|re| (-r..=r).map(move |im| (re, im)))
        .filter(|&z| (1..=norm_max).contains(&gnorm(z)))
        .collect();
    let (mut set, mut rejected) = (BTreeSet::new(), BTreeSet::new());
    for &x1 in &ball {
        for &x2 in &ball {
            let prod = gmul(gmul(x1, x2), gadd(gmul(x1, x1), gmul(x2, x2)));
            if prod == (0, 0) {
                continue;
            }
            let Some(n3) = exact_root(gnorm(prod), 2) else { continue };
            let r3 = exact_root(n3, 2).unwrap_or_else(|| (n3 as f64).sqrt() as i128) + 1;
            for re in 0..=r3 {
                for im in -r3..=r3 {
                    let x3 = (re, im);
                    if !in_half(x3) || gmul(x3, x3) != prod {
                        continue;
                    }
                    let (a, b) = gaussian_pair_canonical(x1, x2);
                    let rec = vec![a.0, a.1, b.0, b.1, x3.0, x3.1];
                    if gcoprime(x1, x2) {
                        set.insert(rec);
                    } else {
                        rejected.insert(rec);
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected.len())
}

/// `x1 x2 x3 (x1 + x2 + x3) = x4^n` over `x1 < x2 < x3 <= max` with the four
/// factors pairwise coprime.
pub fn euler_product(n: u32, max: i128) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x1 in 1..=max {
        for x2 in x1 + 1..=max {
            for x3 in x2 + 1..=max {
                let s = x1 + x2 + x3;
                if let Some(x4) = exact_root(x1 * x2 * x3 * s, n) {
                    if all_coprime(&[x1, x2, x3, s]) {
                        set.insert(vec![x1, x2, x3, x4]);
                    } else {
                        rejected += 1;
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

/// Reducible `x^2 + (a^n + b^n) x - (ab)^n` over coprime `a < b <= a_max`,
/// `n <= n_max`, as `[a, b, n, sqrt(discriminant)]`.
pub fn quadratic(a_max: i128, n_max: u32) -> Found {
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for a in 1..=a_max {
        for b in a + 1..=a_max {
            for n in 1..=n_max {
                let s = ipow(a, n) + ipow(b, n);
                let disc = s * s + 4 * ipow(a * b, n);
                if let Some(d) = exact_root(disc, 2) {
                    if gcd(a, b) == 1 {
                        set.insert(vec![a, b, i128::from(n), d]);
                    } else {
                        rejected += 1;
                    }
                }
            }
        }
    }
    Found::from_set(set, rejected)
}

fn nondecreasing(len: usize, max: i128) -> Vec<Vec<i128>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in nondecreasing(len - 1, max) {
        let lo = head.last().copied().unwrap_or(1);
        for v in lo..=max {
            let mut t = head.clone();
            t.push(v);
            out.push(t);
        }
    }
    out
}

/// `sum x^k = sum y^k` over nondecreasing `x` (length `h`) and `y` (length
/// `l`) with no value on both sides.
pub fn equal_sums(h: usize, l: usize, k: u32, max: i128, pairwise: bool) -> Found {
    let xs = nondecreasing(h, max);
    let ys = nondecreasing(l, max);
    let sum = |t: &[i128]| t.iter().map(|&v| ipow(v, k)).sum::<i128>();
    let ysums: Vec<i128> = ys.iter().map(|y| sum(y)).collect();
    let (mut set, mut rejected) = (BTreeSet::new(), 0);
    for x in &xs {
        let sx = sum(x);
        for (y, &sy) in ys.iter().zip(&ysums) {
            if sx != sy || x.iter().any(|v| y.contains(v)) {
                continue;
            }
            let mut all = x.clone();
            all.extend(y);
            if pairwise && !all_coprime(&all) {
                rejected += 1;
            } else {
                set.insert(all);
            }
        }
    }
    Found::from_set(set, rejected)
}

/// Integer roots of `x^3 + b x + c` with multiplicity, by scanning every
/// `r` with `r^2 <= |b| + |c|` (any root with `|r| > 1` satisfies this).
pub fn cubic_integer_roots(b: i128, c: i128) -> Vec<i128> {
    let lim = exact_root_floor(b.abs() + c.abs()).max(1);
    let mut roots = Vec::new();
    for r in -lim..=lim {
        if r * r * r + b * r + c == 0 {
            // multiplicity via the derivative 3r^2 + b and second derivative 6r
            let m = if 3 * r * r + b != 0 {
                1
            } else if r != 0 {
                2
            } else {
                3
            };
            roots.extend(std::iter::repeat_n(r, m));
        }
    }
    roots
}

fn exact_root_floor(v: i128) -> i128 {
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Coprime `(a, b)`, `1 <= a <= a_max`, `1 <= |b| <= b_max`, for which
/// `x^3 + b x + a^n` has three integer roots; also returns the number of
/// pairs examined.
pub fn split_cubics(a_max: i128, b_max: i128, n: u32) -> (Vec<(i128, i128)>, u64) {
    let (mut out, mut seen) = (Vec::new(), 0);
    for a in 1..=a_max {
        for b in -b_max..=b_max {
            if b == 0 || gcd(a, b) != 1 {
                continue;
            }
            seen += 1;
            if cubic_integer_roots(b, ipow(a, n)).len() == 3 {
                out.push((a, b));
            }
        }
    }
    (out, seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(exact_root(3600, 2), Some(60));
        assert_eq!(exact_root(3601, 2), None);
        assert_eq!(exact_root(0, 3), Some(0));
        assert_eq!(cubic_integer_roots(-481, 3600), vec![-25, 9, 16]);
        assert_eq!(cubic_integer_roots(-3, 2), vec![-2, 1, 1]);
    }

    #[test]
    fn canonical_triples() {
        assert_eq!(sys3_canonical([-3, 2, 1]), [1, 2, -3]);
        assert_eq!(sys3_canonical([3, -2, -1]), [-1, -2, 3]);
    }

    #[test]
    fn pythagorean() {
        assert_eq!(fermat(2, 30, true).solutions.len(), 5);
    }
}
