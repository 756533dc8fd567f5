//! Closed-form sizes of the enumerated spaces. These are computed without
//! running any enumeration so they can be checked against the counters the
//! searches report.

use alloc::vec;

/// `C(n, r)`; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..u128::from(r) {
        acc = acc * (u128::from(n) - i) / (i + 1);
    }
    u64::try_from(acc).expect("count fits in u64")
}

/// Pairs `x <= y` over `1..=m`.
pub fn ordered_pairs(m: u64) -> u64 {
    m * (m + 1) / 2
}

/// Nondecreasing `h`-tuples times nondecreasing `l`-tuples over `1..=m`.
pub fn equal_sums(m: u64, h: u64, l: u64) -> u64 {
    binomial(m + h - 1, h) * binomial(m + l - 1, l)
}

/// `(x <= y, z)` triples over `1..=m`.
pub fn quadruple(m: u64) -> u64 {
    m * ordered_pairs(m)
}

/// Ordered triples of nonzero integers in `[-m, m]`.
pub fn sys3(m: u64) -> u64 {
    (2 * m).pow(3)
}

/// Gaussian integers with `re > 0, im >= 0` and norm at most `n`, via
/// `r_2(k) = 4 (d_1(k) - d_3(k))`.
pub fn gaussian_quadrant(n: u64) -> u64 {
    (0..=n / 4).map(|j| n / (4 * j + 1) - n / (4 * j + 3)).sum()
}

/// `(x1 in quadrant, x2 in half plane)` pairs; the half plane has twice as
/// many elements as the quadrant.
pub fn gaussian_pairs(n: u64) -> u64 {
    let q = gaussian_quadrant(n);
    q * 2 * q
}

fn mobius_table(n: usize) -> alloc::vec::Vec<i8> {
    let mut mu = vec![1i8; n + 1];
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        for m in (p..=n).step_by(p) {
            if m > p {
                composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        let sq = p.saturating_mul(p);
        for m in (sq..=n).step_by(sq.max(1)) {
            mu[m] = 0;
        }
    }
    mu
}

/// `#{(a, b) : 1 <= a <= a_max, 1 <= |b| <= b_max, gcd(a, b) = 1}`.
pub fn coprime_cubic_pairs(a_max: u64, b_max: u64) -> u64 {
    let top = a_max.min(b_max) as usize;
    let mu = mobius_table(top);
    let s: i128 = (1..=top as u64)
        .map(|d| i128::from(mu[d as usize]) * i128::from(a_max / d) * i128::from(b_max / d))
        .sum();
    u64::try_from(2 * s).expect("nonnegative")
}
