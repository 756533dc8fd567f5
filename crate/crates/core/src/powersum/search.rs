//! Meet-in-the-middle search for `x_1^k + .. + x_h^k = y_1^k + .. + y_l^k`.
//!
//! Every candidate is a pair of nondecreasing tuples `x` (length `h`) and
//! `y` (length `l`) over `1..=max`. The `x` tuple is cut after its first
//! `a = ceil(h/2)` entries: the head `A` goes into a table keyed by
//! `sum A^k`, and each probe fixes the tail `B` together with `y` and looks
//! up `sum y^k - sum B^k`. A head matches a probe only when
//! `max(A) <= min(B)`, so each sorted `x` is produced exactly once.
//!
//! When the head table would exceed the memory cap the heads are processed
//! in chunks that each fit under the cap; every chunk is sorted by sum and
//! probed by binary search.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use hashbrown::HashMap;

use crate::diophantine::{Equation, Partial, RangeSearch, SolutionRecord};
use crate::error::{Error, Result};
use crate::exactmath::{first_shared_factor, pow_unchecked, ExactInt};

/// Default cap on stored head tuples.
pub const DEFAULT_MEMORY_CAP: u64 = 1 << 22;

/// Coprimality filter over all terms of both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CoprimeMode {
    None,
    Pairwise,
}

/// Number of nondecreasing `len`-tuples over `1..=m`: `C(m + len - 1, len)`.
pub fn multiset_count(m: u64, len: u32) -> u64 {
    if len == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=u128::from(len) {
        acc = acc * (u128::from(m) - 1 + i) / i;
    }
    u64::try_from(acc).expect("count fits in u64")
}

/// Steps `t` to the next nondecreasing tuple with entries `<= hi`.
fn advance(t: &mut [u32], hi: u32) -> bool {
    for i in (0..t.len()).rev() {
        if t[i] < hi {
            t[i] += 1;
            let v = t[i];
            for s in &mut t[i + 1..] {
                *s = v;
            }
            return true;
        }
    }
    false
}

fn first_tuple(len: usize, lo: u32) -> Vec<u32> {
    vec![lo; len]
}

enum Heads {
    Hashed(HashMap<ExactInt, Vec<u32>>),
    Chunked { per_chunk: usize },
}

pub struct EqualSumsSearch {
    h: u32,
    l: u32,
    k: u32,
    max: u32,
    mode: CoprimeMode,
    a: usize,
    powers: Vec<ExactInt>,
    heads: Vec<u32>,
    index: Heads,
}

impl EqualSumsSearch {
    pub fn new(h: u32, l: u32, k: u32, max: u64, mode: CoprimeMode) -> Result<Self> {
        Self::with_memory_cap(h, l, k, max, mode, DEFAULT_MEMORY_CAP)
    }

    /// `memory_cap` bounds how many head tuples are held at once.
    pub fn with_memory_cap(h: u32, l: u32, k: u32, max: u64, mode: CoprimeMode, memory_cap: u64) -> Result<Self> {
        if l == 0 || h < l {
            return Err(Error::usage("need h >= l >= 1"));
        }
        if k == 0 {
            return Err(Error::usage("exponent k must be at least 1"));
        }
        if max == 0 {
            return Err(Error::usage("bound must be at least 1"));
        }
        if memory_cap == 0 {
            return Err(Error::usage("memory cap must be at least 1"));
        }
        let max = u32::try_from(max).map_err(|_| Error::BoundTooLarge("equal-sums bound exceeds u32".into()))?;
        let a = h.div_ceil(2) as usize;
        let powers = (0..=max).map(|v| pow_unchecked(&ExactInt::from(v), k)).collect();
        let total = multiset_count(u64::from(max), a as u32);
        let mut s = EqualSumsSearch {
            h,
            l,
            k,
            max,
            mode,
            a,
            powers,
            heads: Vec::new(),
            index: Heads::Chunked { per_chunk: memory_cap.min(total).max(1) as usize },
        };
        if total <= memory_cap {
            let mut map: HashMap<ExactInt, Vec<u32>> = HashMap::new();
            let mut t = first_tuple(a, 1);
            let mut idx = 0u32;
            loop {
                s.heads.extend_from_slice(&t);
                map.entry(s.sum(&t)).or_default().push(idx);
                idx += 1;
                if !advance(&mut t, max) {
                    break;
                }
            }
            s.index = Heads::Hashed(map);
        }
        Ok(s)
    }

    pub fn uses_fallback(&self) -> bool {
        matches!(self.index, Heads::Chunked { .. })
    }

    /// Closed-form candidate count `C(M+h-1, h) * C(M+l-1, l)`.
    pub fn expected_candidates(&self) -> u64 {
        multiset_count(u64::from(self.max), self.h) * multiset_count(u64::from(self.max), self.l)
    }

    fn sum(&self, t: &[u32]) -> ExactInt {
        t.iter().map(|&v| &self.powers[v as usize]).fold(ExactInt::ZERO, |acc, p| acc + p)
    }

    fn head(&self, idx: u32) -> &[u32] {
        let s = idx as usize * self.a;
        &self.heads[s..s + self.a]
    }

    /// Every `(y, tail, target, min_tail)` probe with `y_l = last`.
    fn probes(&self, last: u32, mut f: impl FnMut(&[u32], &[u32], &ExactInt, u32) -> Result<()>) -> Result<()> {
        let b = self.h as usize - self.a;
        let mut y = first_tuple(self.l as usize - 1, 1);
        loop {
            let mut yy = y.clone();
            yy.push(last);
            let ysum = self.sum(&yy);
            if b == 0 {
                f(&yy, &[], &ysum, self.max)?;
            } else {
                let mut t = first_tuple(b, 1);
                loop {
                    let target = &ysum - self.sum(&t);
                    f(&yy, &t, &target, t[0])?;
                    if !advance(&mut t, self.max) {
                        break;
                    }
                }
            }
            if y.is_empty() || !advance(&mut y, last) {
                break;
            }
        }
        Ok(())
    }

    fn emit(&self, out: &mut Partial, head: &[u32], tail: &[u32], y: &[u32]) -> Result<()> {
        if head.iter().chain(tail).any(|x| y.contains(x)) {
            return Ok(());
        }
        let vals: Vec<ExactInt> = head.iter().chain(tail).chain(y).map(|&v| ExactInt::from(v)).collect();
        let tags: &[&str] = match self.mode {
            CoprimeMode::None => &[],
            CoprimeMode::Pairwise => {
                if first_shared_factor(&vals).is_some() {
                    out.filtered += 1;
                    return Ok(());
                }
                &["pairwise_coprime"]
            }
        };
        let eq = Equation::EqualSums { k: self.k, h: self.h, l: self.l };
        out.records.push(SolutionRecord::new("equal_sums", eq, vals, tags)?);
        Ok(())
    }

    fn run_hashed(&self, map: &HashMap<ExactInt, Vec<u32>>, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        for i in range {
            self.probes(i as u32 + 1, |y, tail, target, m| {
                out.candidates += multiset_count(u64::from(m), self.a as u32);
                if let Some(ids) = map.get(target) {
                    for &id in ids {
                        let head = self.head(id);
                        if head[self.a - 1] <= m {
                            self.emit(&mut out, head, tail, y)?;
                        }
                    }
                }
                Ok(())
            })?;
        }
        Ok(out)
    }

    fn run_chunked(&self, per_chunk: usize, range: Range<u64>) -> Result<Partial> {
        let mut out = Partial::default();
        for i in range.clone() {
            self.probes(i as u32 + 1, |_, _, _, m| {
                out.candidates += multiset_count(u64::from(m), self.a as u32);
                Ok(())
            })?;
        }
        let mut t = first_tuple(self.a, 1);
        let mut more = true;
        while more {
            let mut chunk: Vec<(ExactInt, Vec<u32>)> = Vec::with_capacity(per_chunk);
            while more && chunk.len() < per_chunk {
                chunk.push((self.sum(&t), t.clone()));
                more = advance(&mut t, self.max);
            }
            chunk.sort();
            for i in range.clone() {
                self.probes(i as u32 + 1, |y, tail, target, m| {
                    let start = chunk.partition_point(|(s, _)| s < target);
                    for (s, head) in &chunk[start..] {
                        if s != target {
                            break;
                        }
                        if head[self.a - 1] <= m {
                            self.emit(&mut out, head, tail, y)?;
                        }
                    }
                    Ok(())
                })?;
            }
        }
        Ok(out)
    }
}

impl RangeSearch for EqualSumsSearch {
    /// Indexed by the largest right-hand term `y_l`.
    fn outer_len(&self) -> u64 {
        u64::from(self.max)
    }

    fn run_range(&self, range: Range<u64>) -> Result<Partial> {
        match &self.index {
            Heads::Hashed(map) => self.run_hashed(map, range),
            Heads::Chunked { per_chunk } => self.run_chunked(*per_chunk, range),
        }
    }
}

pub fn search_equal_sums(h: u32, l: u32, k: u32, max: u64, mode: CoprimeMode) -> Result<Vec<SolutionRecord>> {
    Ok(EqualSumsSearch::new(h, l, k, max, mode)?.run()?.records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(rs: &[SolutionRecord]) -> Vec<Vec<i128>> {
        rs.iter().map(|r| r.values().map(|v| v.as_i128().unwrap()).collect()).collect()
    }

    #[test]
    fn small_cubes() {
        let rs = search_equal_sums(3, 1, 3, 10, CoprimeMode::None).unwrap();
        assert_eq!(all(&rs), vec![vec![1, 6, 8, 9], vec![3, 4, 5, 6]]);
    }

    #[test]
    fn lander_parkin() {
        let s = EqualSumsSearch::new(4, 1, 5, 150, CoprimeMode::None).unwrap();
        let r = s.run().unwrap();
        assert_eq!(all(&r.records), vec![vec![27, 84, 110, 133, 144]]);
        assert_eq!(r.candidates, s.expected_candidates());
        let r = EqualSumsSearch::new(4, 1, 5, 150, CoprimeMode::Pairwise).unwrap().run().unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.filtered, 1);
    }

    #[test]
    fn fallback_agrees_with_table() {
        for (h, l, k, m) in [(2, 2, 3, 30), (3, 1, 3, 20), (3, 2, 2, 12), (1, 1, 2, 10)] {
            let full = EqualSumsSearch::new(h, l, k, m, CoprimeMode::None).unwrap();
            let small = EqualSumsSearch::with_memory_cap(h, l, k, m, CoprimeMode::None, 7).unwrap();
            assert!(!full.uses_fallback() && small.uses_fallback());
            let (a, b) = (full.run().unwrap(), small.run().unwrap());
            assert_eq!(a, b);
            assert_eq!(a.candidates, full.expected_candidates());
        }
    }

    #[test]
    fn trivial_matches_excluded() {
        // h = l = 1 only has x = y
        assert!(search_equal_sums(1, 1, 3, 20, CoprimeMode::None).unwrap().is_empty());
        // 1 + 2^2 + ... style cancellations like (1, 2 | 1, 2) are dropped
        for r in search_equal_sums(2, 2, 2, 15, CoprimeMode::None).unwrap() {
            let v: Vec<_> = r.values().cloned().collect();
            assert!(!v[..2].iter().any(|x| v[2..].contains(x)));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(10, 3), 220);
        assert_eq!(multiset_count(5, 0), 1);
        assert_eq!(multiset_count(0, 2), 0);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(EqualSumsSearch::new(1, 2, 3, 10, CoprimeMode::None).is_err());
        assert!(EqualSumsSearch::new(2, 0, 3, 10, CoprimeMode::None).is_err());
    }
}
