//! Partitions, overpartitions, and the statistics defined on them.
//!
//! A [`Partition`] keeps its parts in non-increasing order. The enumeration
//! entry points ([`partitions_of`], [`overpartitions_of`],
//! [`no_rep_odd_pairs_of`]) are lazy iterators so that tallies over a few
//! million objects never materialize them all at once.
//!
//! An overpartition is a partition in which the first occurrence of a part
//! size may be overlined; equivalently, and this is the representation used
//! here, a pair `(overlined, plain)` with `overlined` a partition into
//! distinct parts and `plain` unrestricted. Partitions without repeated odd
//! parts decompose the same way into `(odd distinct, even)`; see
//! [`NoRepOddPair`].
//!
//! Statistics live in [`stats`]; `crank`-style tallies and residue counts in
//! [`counts`].

mod counts;
mod iter;
mod overpartition;
mod stats;

pub use counts::{blo_modified_count, count_residue, count_statistic, CountTable};
pub use iter::{partitions_of, PartitionIter};
pub use overpartition::{
    no_rep_odd_pairs_of, overpartitions_of, NoRepOddPair, OverTriple, Overpartition,
    OverpartitionIter,
};
pub use stats::{
    crank, crank1, crank2, kappa_stat, lambda_stat, m2crank, m2rank, rank, rank_over, theta_stat,
    Statistic,
};

use std::fmt;

/// An integer partition: a multiset of positive parts, stored non-increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Wraps parts that are already non-increasing (checked in debug builds).
    pub(crate) fn from_desc(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned (sum of parts).
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, or `None` for the empty partition.
    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// How many parts equal 1. They sit at the tail of the sorted parts.
    pub fn count_ones(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// How many parts strictly exceed `bound`.
    pub fn count_parts_above(&self, bound: u32) -> usize {
        self.parts.partition_point(|&p| p > bound)
    }

    pub fn contains_part(&self, part: u32) -> bool {
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Halves every part. Panics unless all parts are even; used to read an
    /// even partition as `2 * (ordinary partition)`.
    pub fn halve(&self) -> Partition {
        assert!(
            self.parts.iter().all(|&p| p % 2 == 0),
            "halve requires even parts"
        );
        Partition::from_desc(self.parts.iter().map(|&p| p / 2).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let joined = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+");
        write!(f, "{joined}")
    }
}

/// The part-multiset restrictions under which enumeration runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionClass {
    /// No restriction.
    Unrestricted,
    /// Strictly decreasing parts.
    Distinct,
    /// All parts odd.
    Odd,
    /// All parts even.
    Even,
    /// Odd and strictly decreasing.
    DistinctOdd,
    /// Odd parts may not repeat; even parts are free.
    NoRepeatedOdd,
}

impl PartitionClass {
    /// Membership test, mostly useful for validating inputs and in tests;
    /// the iterator never generates and discards.
    pub fn contains(&self, p: &Partition) -> bool {
        let parts = p.parts();
        match self {
            PartitionClass::Unrestricted => true,
            PartitionClass::Distinct => p.has_distinct_parts(),
            PartitionClass::Odd => parts.iter().all(|&x| x % 2 == 1),
            PartitionClass::Even => parts.iter().all(|&x| x % 2 == 0),
            PartitionClass::DistinctOdd => {
                p.has_distinct_parts() && parts.iter().all(|&x| x % 2 == 1)
            }
            PartitionClass::NoRepeatedOdd => parts
                .windows(2)
                .all(|w| w[0] != w[1] || w[0] % 2 == 0),
        }
    }

    /// Largest part admissible by the parity filter, at most `limit`.
    fn largest_allowed(&self, limit: u32) -> Option<u32> {
        match self {
            PartitionClass::Unrestricted
            | PartitionClass::Distinct
            | PartitionClass::NoRepeatedOdd => (limit >= 1).then_some(limit),
            PartitionClass::Odd | PartitionClass::DistinctOdd => match limit {
                0 => None,
                l if l % 2 == 1 => Some(l),
                l => Some(l - 1),
            },
            PartitionClass::Even => match limit {
                0 | 1 => None,
                l if l % 2 == 0 => Some(l),
                l => Some(l - 1),
            },
        }
    }

    /// Upper bound for the part following a placed part `p`.
    fn next_bound(&self, p: u32) -> u32 {
        match self {
            PartitionClass::Unrestricted | PartitionClass::Odd | PartitionClass::Even => p,
            PartitionClass::Distinct | PartitionClass::DistinctOdd => p - 1,
            PartitionClass::NoRepeatedOdd => {
                if p % 2 == 1 {
                    p - 1
                } else {
                    p
                }
            }
        }
    }
}
