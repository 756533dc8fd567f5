//! Primality testing and factorization.
//!
//! Factorization runs trial division up to [`TRIAL_DIVISION_LIMIT`], then
//! Pollard's rho with Brent's cycle detection on each remaining composite
//! cofactor, capped at [`RHO_ITERATION_CAP`] iterations per cofactor. A
//! cofactor that survives both stages is reported as an error rather than
//! guessed at.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{arith, ExactInt};
use crate::error::{Error, Result};

pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
pub const RHO_ITERATION_CAP: u64 = 1 << 24;
/// Rounds of randomized Miller-Rabin above the 64-bit range.
pub const PROBABLE_PRIME_ROUNDS: usize = 64;
const PRIMALITY_SEED: u64 = 0x0066_6c74_5f6c_6162;

// Deterministic for every n < 3.3e24, which covers u64.
const MR_BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A prime factorization `n = prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Factorization {
    pub n: ExactInt,
    pub factors: Vec<(ExactInt, u32)>,
}

impl Factorization {
    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> ExactInt {
        self.factors
            .iter()
            .map(|(p, e)| arith::pow_unchecked(p, *e))
            .product()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega_total(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).sum()
    }
}

/// Residue class of a prime modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Mod4Class {
    Two,
    /// p = 4k + 1
    PlusOne,
    /// p = 4k + 3
    MinusOne,
}

pub fn mod4_class(p: &ExactInt) -> Result<Mod4Class> {
    if !is_prime(p) {
        return Err(Error::usage(alloc::format!("mod4_class needs a prime, got {p}")));
    }
    Ok(match p.rem_u64(4) {
        2 => Mod4Class::Two,
        1 => Mod4Class::PlusOne,
        _ => Mod4Class::MinusOne,
    })
}

/// Deterministic below 2^64; above that, [`PROBABLE_PRIME_ROUNDS`] rounds of
/// Miller-Rabin with bases drawn from a fixed-seed generator.
pub fn is_prime(n: &ExactInt) -> bool {
    if !n.is_positive() {
        return false;
    }
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_probable_prime_big(&n.to_bigint().magnitude().clone()),
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (d, s) = odd_part(n - 1);
    MR_BASES_64.iter().all(|&a| mr_round_u64(n, a, d, s))
}

fn odd_part(m: u64) -> (u64, u32) {
    let s = m.trailing_zeros();
    (m >> s, s)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn mr_round_u64(n: u64, a: u64, d: u64, s: u32) -> bool {
    let mut x = pow_mod(a % n, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if n.is_even() {
        return false;
    }
    for p in SMALL_PRIMES_FOR_BIG {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(PRIMALITY_SEED);
    let low = BigUint::from(2u32);
    'rounds: for _ in 0..PROBABLE_PRIME_ROUNDS {
        let a = random_below(&mut rng, &(&n_minus_1 - &low)) + &low;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'rounds;
            }
        }
        return false;
    }
    true
}

// uniform enough for witness selection; bias from the final reduction is irrelevant here
fn random_below(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    let words = (bound.bits() as usize).div_ceil(32) + 1;
    let digits: Vec<u32> = (0..words).map(|_| rng.next_u32()).collect();
    BigUint::new(digits) % bound
}

const SMALL_PRIMES_FOR_BIG: [u32; 11] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Complete prime factorization of `n >= 1`.
pub fn factorize(n: &ExactInt) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::usage(alloc::format!("factorize needs n >= 1, got {n}")));
    }
    let mut primes: Vec<ExactInt> = Vec::new();
    let mut rest = n.to_bigint().magnitude().clone();

    // trial division
    let push_small = |p: u64, rest: &mut BigUint, primes: &mut Vec<ExactInt>| {
        while (&*rest % p).is_zero() {
            *rest /= p;
            primes.push(ExactInt::from(p));
        }
    };
    push_small(2, &mut rest, &mut primes);
    let mut p = 3u64;
    while p <= TRIAL_DIVISION_LIMIT {
        if let Some(mut r) = rest.to_u128() {
            // finish on machine words
            while p <= TRIAL_DIVISION_LIMIT && u128::from(p) * u128::from(p) <= r {
                while r % u128::from(p) == 0 {
                    r /= u128::from(p);
                    primes.push(ExactInt::from(p));
                }
                p += 2;
            }
            rest = BigUint::from(r);
            break;
        }
        push_small(p, &mut rest, &mut primes);
        p += 2;
    }

    if !rest.is_one() {
        let mut stack = alloc::vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            let me = ExactInt::from_bigint(m.clone().into());
            if is_prime(&me) {
                primes.push(me);
                continue;
            }
            // rho handles prime powers poorly, so peel them first
            if let Some((root, k)) = perfect_power(&m) {
                for _ in 0..k {
                    stack.push(root.clone());
                }
                continue;
            }
            match rho_brent(&m, RHO_ITERATION_CAP) {
                Some(d) => {
                    let other = &m / &d;
                    stack.push(d);
                    stack.push(other);
                }
                None => {
                    return Err(Error::FactorizationIncomplete {
                        n: n.clone(),
                        cofactor: me,
                    })
                }
            }
        }
    }

    primes.sort();
    let mut factors: Vec<(ExactInt, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n: n.clone(), factors })
}

/// Largest `k >= 2` with `m = r^k`, if any.
fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = m.bits() as u32;
    for k in (2..=bits).rev() {
        let r = m.nth_root(k);
        if r > BigUint::one() && num_traits::Pow::pow(&r, k) == *m {
            return Some((r, k));
        }
    }
    None
}

/// Pollard rho, Brent variant. Returns a nontrivial factor of composite `n`.
fn rho_brent(n: &BigUint, cap: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        return rho_brent_u64(small, cap).map(BigUint::from);
    }
    let one = BigUint::one();
    let mut spent = 0u64;
    let mut c = 1u32;
    while spent < cap {
        let f = |x: &BigUint| (x * x + c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = one.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        const M: u64 = 128;
        while g.is_one() && spent < cap {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            spent += r;
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = M.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                spent += steps;
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
        c += 1;
    }
    None
}

fn rho_brent_u64(n: u64, cap: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut spent = 0u64;
    let mut c = 1u64;
    while spent < cap {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        const M: u64 = 128;
        while g == 1 && spent < cap {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            spent += r;
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = M.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                spent += steps;
                g = arith::gcd_u128(q as u128, n as u128) as u64;
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = arith::gcd_u128(x.abs_diff(ys) as u128, n as u128) as u64;
                if g != 1 {
                    break;
                }
            }
        }
        if g != 1 && g != n {
            return Some(g);
        }
        c += 1;
    }
    None
}

/// A square root of -1 modulo a prime `p = 1 (mod 4)`.
pub(crate) fn sqrt_minus_one_mod(p: u64) -> Option<u64> {
    if p % 4 != 1 {
        return None;
    }
    // c^((p-1)/4) for a quadratic non-residue c
    for c in 2..p {
        if pow_mod(c, (p - 1) / 2, p) == p - 1 {
            return Some(pow_mod(c, (p - 1) / 4, p));
        }
    }
    None
}
