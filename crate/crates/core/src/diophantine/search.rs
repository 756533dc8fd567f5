use alloc::vec::Vec;
use core::ops::Range;

use crate::error::Result;

use super::SolutionRecord;

/// Output of one slice of a search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Partial {
    pub records: Vec<SolutionRecord>,
    /// Tuples examined.
    pub candidates: u64,
    /// Tuples that satisfied the relation but failed a coprimality filter.
    pub filtered: u64,
}

impl Partial {
    pub fn merge(&mut self, other: Partial) {
        self.records.extend(other.records);
        self.candidates += other.candidates;
        self.filtered += other.filtered;
    }

    /// Sorts and deduplicates the records.
    pub fn finish(mut self) -> SearchResult {
        self.records.sort();
        self.records.dedup();
        SearchResult { records: self.records, candidates: self.candidates, filtered: self.filtered }
    }
}

/// A finished search: records in canonical order plus counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchResult {
    pub records: Vec<SolutionRecord>,
    pub candidates: u64,
    pub filtered: u64,
}

/// A bounded exhaustive search whose outermost loop can be cut into
/// independent index ranges.
///
/// For every split of `0..outer_len()` into consecutive ranges, merging the
/// per-range [`Partial`]s gives the same [`SearchResult`] as a single run.
pub trait RangeSearch: Sync {
    fn outer_len(&self) -> u64;
    fn run_range(&self, range: Range<u64>) -> Result<Partial>;

    fn run(&self) -> Result<SearchResult> {
        Ok(self.run_range(0..self.outer_len())?.finish())
    }
}

/// Splits `0..len` into `parts` consecutive ranges of near-equal size
/// (earlier ranges get the remainder). `parts == 0` is treated as 1.
pub fn partition(len: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    let (base, extra) = (len / parts, len % parts);
    let mut start = 0;
    (0..parts)
        .map(|i| {
            let end = start + base + u64::from(i < extra);
            let r = start..end;
            start = end;
            r
        })
        .collect()
}

/// Runs the search slice by slice over `parts` ranges and merges in order.
pub fn run_partitioned<S: RangeSearch + ?Sized>(search: &S, parts: usize) -> Result<SearchResult> {
    let mut acc = Partial::default();
    for r in partition(search.outer_len(), parts) {
        acc.merge(search.run_range(r)?);
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_covers_exactly() {
        for len in [0u64, 1, 5, 7, 30, 101] {
            for parts in [0usize, 1, 2, 7, 200] {
                let rs = partition(len, parts);
                assert_eq!(rs.len(), parts.max(1));
                assert_eq!(rs.first().unwrap().start, 0);
                assert_eq!(rs.last().unwrap().end, len);
                for w in rs.windows(2) {
                    assert_eq!(w[0].end, w[1].start);
                }
            }
        }
    }
}
