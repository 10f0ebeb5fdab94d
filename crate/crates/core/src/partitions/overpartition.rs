use std::fmt;

use crate::partitions::{partitions_of, Partition, PartitionClass, PartitionIter};

/// An overpartition, as the pair of its overlined and plain parts.
///
/// Overlining marks at most the first occurrence of each part size, so the
/// overlined half always has distinct parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overpartition {
    overlined: Partition,
    plain: Partition,
}

impl Overpartition {
    pub fn new(overlined: Partition, plain: Partition) -> Self {
        assert!(
            overlined.has_distinct_parts(),
            "overlined parts must be distinct"
        );
        Overpartition { overlined, plain }
    }

    pub fn overlined(&self) -> &Partition {
        &self.overlined
    }

    pub fn plain(&self) -> &Partition {
        &self.plain
    }

    pub fn n(&self) -> u32 {
        self.overlined.n() + self.plain.n()
    }

    pub fn is_empty(&self) -> bool {
        self.overlined.is_empty() && self.plain.is_empty()
    }

    /// Total number of parts, overlined or not.
    pub fn num_parts(&self) -> usize {
        self.overlined.num_parts() + self.plain.num_parts()
    }

    /// Largest part regardless of overlining.
    pub fn largest(&self) -> Option<u32> {
        self.overlined.largest().max(self.plain.largest())
    }

    /// Splits the plain parts by parity: `(overlined, plain even, plain odd)`.
    pub fn to_triple(&self) -> OverTriple {
        let (even, odd): (Vec<u32>, Vec<u32>) =
            self.plain.parts().iter().partition(|&&p| p % 2 == 0);
        OverTriple {
            overlined: self.overlined.clone(),
            plain_even: Partition::from_desc(even),
            plain_odd: Partition::from_desc(odd),
        }
    }
}

impl fmt::Display for Overpartition {
    /// Merged form with `~` marking overlined parts, e.g. `2~+1~+1`; ties
    /// put the overlined copy first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let mut rendered = Vec::with_capacity(self.num_parts());
        let (mut o, mut p) = (self.overlined.parts(), self.plain.parts());
        while !o.is_empty() || !p.is_empty() {
            if p.is_empty() || (!o.is_empty() && o[0] >= p[0]) {
                rendered.push(format!("{}~", o[0]));
                o = &o[1..];
            } else {
                rendered.push(p[0].to_string());
                p = &p[1..];
            }
        }
        write!(f, "{}", rendered.join("+"))
    }
}

/// An overpartition with its plain parts split by parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverTriple {
    pub overlined: Partition,
    pub plain_even: Partition,
    pub plain_odd: Partition,
}

impl OverTriple {
    /// Reassembles the overpartition; inverse of [`Overpartition::to_triple`].
    pub fn merge(&self) -> Overpartition {
        Overpartition::new(
            self.overlined.clone(),
            merge_desc(self.plain_even.parts(), self.plain_odd.parts()),
        )
    }
}

/// A partition without repeated odd parts, split as
/// `(odd parts — necessarily distinct, even parts)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoRepOddPair {
    pub odd_distinct: Partition,
    pub even: Partition,
}

impl NoRepOddPair {
    pub fn from_partition(p: &Partition) -> Self {
        assert!(
            PartitionClass::NoRepeatedOdd.contains(p),
            "odd parts repeat in {p}"
        );
        let (even, odd): (Vec<u32>, Vec<u32>) = p.parts().iter().partition(|&&x| x % 2 == 0);
        NoRepOddPair {
            odd_distinct: Partition::from_desc(odd),
            even: Partition::from_desc(even),
        }
    }

    pub fn merged(&self) -> Partition {
        merge_desc(self.odd_distinct.parts(), self.even.parts())
    }

    pub fn n(&self) -> u32 {
        self.odd_distinct.n() + self.even.n()
    }

    pub fn is_empty(&self) -> bool {
        self.odd_distinct.is_empty() && self.even.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.odd_distinct.num_parts() + self.even.num_parts()
    }

    pub fn largest(&self) -> Option<u32> {
        self.odd_distinct.largest().max(self.even.largest())
    }
}

fn merge_desc(a: &[u32], b: &[u32]) -> Partition {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] >= b[j]) {
            merged.push(a[i]);
            i += 1;
        } else {
            merged.push(b[j]);
            j += 1;
        }
    }
    Partition::from_desc(merged)
}

/// Enumerates the overpartitions of `n`, each exactly once.
///
/// Ordering: underlying partitions in descending lexicographic order; within
/// one, the subsets of overlinable sizes counted in binary with bit `k`
/// toggling the `k`-th largest size. For `n = 3` that reads
/// `3, 3~, 2+1, 2~+1, 2+1~, 2~+1~, 1+1+1, 1~+1+1`.
pub fn overpartitions_of(n: u32) -> OverpartitionIter {
    OverpartitionIter {
        bases: partitions_of(n, PartitionClass::Unrestricted),
        base: None,
        sizes: Vec::new(),
        mask: 0,
    }
}

/// Lazy iterator behind [`overpartitions_of`].
pub struct OverpartitionIter {
    bases: PartitionIter,
    base: Option<Partition>,
    sizes: Vec<u32>,
    mask: u32,
}

impl Iterator for OverpartitionIter {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some(base) = &self.base {
                if u64::from(self.mask) < (1u64 << self.sizes.len()) {
                    let picked = self.mask;
                    self.mask += 1;
                    return Some(split_base(base, &self.sizes, picked));
                }
                self.base = None;
            }
            let base = self.bases.next()?;
            self.sizes = base.parts().to_vec();
            self.sizes.dedup();
            assert!(self.sizes.len() < 32, "size diversity overflows the mask");
            self.mask = 0;
            self.base = Some(base);
        }
    }
}

/// Lifts one copy of each size selected by `mask` out of `base`.
fn split_base(base: &Partition, sizes: &[u32], mask: u32) -> Overpartition {
    let overlined: Vec<u32> = sizes
        .iter()
        .enumerate()
        .filter(|&(k, _)| (mask >> k) & 1 == 1)
        .map(|(_, &s)| s)
        .collect();
    let mut plain = Vec::with_capacity(base.num_parts() - overlined.len());
    let mut next = 0;
    for &part in base.parts() {
        if next < overlined.len() && part == overlined[next] {
            next += 1; // first occurrence of an overlined size
        } else {
            plain.push(part);
        }
    }
    Overpartition {
        overlined: Partition::from_desc(overlined),
        plain: Partition::from_desc(plain),
    }
}

/// Enumerates the partitions of `n` without repeated odd parts, presented as
/// `(odd distinct, even)` pairs, in the order of [`partitions_of`].
pub fn no_rep_odd_pairs_of(n: u32) -> impl Iterator<Item = NoRepOddPair> {
    partitions_of(n, PartitionClass::NoRepeatedOdd).map(|p| NoRepOddPair::from_partition(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(overlined: &[u32], plain: &[u32]) -> Overpartition {
        Overpartition::new(
            Partition::new(overlined.to_vec()),
            Partition::new(plain.to_vec()),
        )
    }

    #[test]
    fn eight_overpartitions_of_three_in_table_order() {
        let got: Vec<String> = overpartitions_of(3).map(|o| o.to_string()).collect();
        assert_eq!(
            got,
            vec!["3", "3~", "2+1", "2~+1", "2+1~", "2~+1~", "1+1+1", "1~+1+1"]
        );
    }

    #[test]
    fn fourteen_overpartitions_of_four() {
        let got: Vec<String> = overpartitions_of(4).map(|o| o.to_string()).collect();
        assert_eq!(
            got,
            vec![
                "4", "4~", "3+1", "3~+1", "3+1~", "3~+1~", "2+2", "2~+2", "2+1+1", "2~+1+1",
                "2+1~+1", "2~+1~+1", "1+1+1+1", "1~+1+1+1"
            ]
        );
    }

    #[test]
    fn split_keeps_halves_consistent() {
        for o in overpartitions_of(9) {
            assert_eq!(o.n(), 9);
            assert!(o.overlined().has_distinct_parts());
        }
    }

    #[test]
    fn counts_match_pair_convolution() {
        // Number of overpartitions of n = sum over k of
        // (#distinct partitions of k) * (#partitions of n - k).
        for n in 0..=12u32 {
            let direct = overpartitions_of(n).count();
            let conv: usize = (0..=n)
                .map(|k| {
                    partitions_of(k, PartitionClass::Distinct).count()
                        * partitions_of(n - k, PartitionClass::Unrestricted).count()
                })
                .sum();
            assert_eq!(direct, conv, "at n = {n}");
        }
        assert_eq!(overpartitions_of(4).count(), 14);
    }

    #[test]
    fn n_zero_yields_single_empty_overpartition() {
        let all: Vec<_> = overpartitions_of(0).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn triple_round_trips() {
        for n in 0..=10u32 {
            for o in overpartitions_of(n) {
                let t = o.to_triple();
                assert!(t.plain_even.parts().iter().all(|p| p % 2 == 0));
                assert!(t.plain_odd.parts().iter().all(|p| p % 2 == 1));
                assert_eq!(t.merge(), o);
            }
        }
    }

    #[test]
    fn triple_split_example() {
        let t = op(&[2], &[4, 3, 1, 1]).to_triple();
        assert_eq!(t.overlined.parts(), &[2]);
        assert_eq!(t.plain_even.parts(), &[4]);
        assert_eq!(t.plain_odd.parts(), &[3, 1, 1]);
    }

    #[test]
    fn no_rep_odd_pairs_split_and_merge() {
        let pairs: Vec<_> = no_rep_odd_pairs_of(9).collect();
        for pr in &pairs {
            assert_eq!(pr.n(), 9);
            assert!(pr.odd_distinct.has_distinct_parts());
            assert!(pr.even.parts().iter().all(|p| p % 2 == 0));
            assert!(PartitionClass::NoRepeatedOdd.contains(&pr.merged()));
        }
        assert_eq!(pairs.len(), 13);
    }

    #[test]
    #[should_panic(expected = "odd parts repeat")]
    fn no_rep_odd_pair_rejects_repeats() {
        let _ = NoRepOddPair::from_partition(&Partition::new(vec![3, 3]));
    }

    #[test]
    fn display_merges_with_ties_overlined_first() {
        assert_eq!(op(&[2], &[2]).to_string(), "2~+2");
        assert_eq!(op(&[2, 1], &[1]).to_string(), "2~+1~+1");
        assert_eq!(op(&[], &[]).to_string(), "∅");
    }
}
