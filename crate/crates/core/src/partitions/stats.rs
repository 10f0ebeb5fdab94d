use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::partitions::{NoRepOddPair, Overpartition, Partition};

/// Dyson's crank. For a nonempty partition with `w` ones and `m` parts
/// larger than `w`: the largest part if `w = 0`, otherwise `m - w`.
///
/// Panics on the empty partition; its crank is a convention that belongs to
/// the callers (tallies at `n = 0` score it as 0).
pub fn crank(p: &Partition) -> i64 {
    assert!(!p.is_empty(), "crank of the empty partition is undefined");
    let ones = p.count_ones() as u32;
    if ones == 0 {
        i64::from(p.largest().unwrap())
    } else {
        p.count_parts_above(ones) as i64 - i64::from(ones)
    }
}

/// Dyson's rank: largest part minus number of parts. Panics on the empty
/// partition.
pub fn rank(p: &Partition) -> i64 {
    assert!(!p.is_empty(), "rank of the empty partition is undefined");
    i64::from(p.largest().unwrap()) - p.num_parts() as i64
}

/// The binary statistic behind the empty-plain-parts branch of [`crank1`],
/// on partitions into distinct parts:
///
/// * 0 — the partition is empty, or both its largest part `l` and `l - 1`
///   occur;
/// * 1 — otherwise (in particular for any single part).
pub fn lambda_stat(p: &Partition) -> i64 {
    assert!(p.has_distinct_parts(), "lambda is defined on distinct parts");
    match p.largest() {
        None => 0,
        Some(l) => {
            if l >= 2 && p.contains_part(l - 1) {
                0
            } else {
                1
            }
        }
    }
}

/// The binary statistic behind the distinct-parts branch of [`crank2`], on
/// nonempty partitions into distinct parts with largest part `l`:
///
/// * `l >= 4` — 0 when `l - 1` or `l - 2` occurs, else 1;
/// * `l = 3` or `l = 2` — 1 when the partition is that single part, else 0;
/// * `l = 1` — 0.
pub fn kappa_stat(p: &Partition) -> i64 {
    assert!(!p.is_empty(), "kappa needs a nonempty partition");
    assert!(p.has_distinct_parts(), "kappa is defined on distinct parts");
    let l = p.largest().unwrap();
    match l {
        0 => unreachable!("parts are positive"),
        1 => 0,
        2 | 3 => i64::from(p.num_parts() == 1),
        _ => i64::from(!(p.contains_part(l - 1) || p.contains_part(l - 2))),
    }
}

/// The binary statistic behind the odd-distinct branch of [`m2crank`], on
/// partitions into distinct odd parts with largest part `l`:
///
/// * empty — 0 (by convention, so the `n = 0` tally is concentrated at 0);
/// * `l >= 5` — 0 when `l - 2` occurs, else 1;
/// * `l = 3` or `l = 1` — 0 when 1 occurs, else 1.
pub fn theta_stat(p: &Partition) -> i64 {
    assert!(p.has_distinct_parts(), "theta is defined on distinct parts");
    assert!(
        p.parts().iter().all(|&x| x % 2 == 1),
        "theta is defined on odd parts"
    );
    match p.largest() {
        None => 0,
        Some(l) if l >= 5 => i64::from(!p.contains_part(l - 2)),
        Some(_) => i64::from(!p.contains_part(1)),
    }
}

/// First residual crank of an overpartition: the crank of the plain parts,
/// falling back to [`lambda_stat`] of the overlined parts when there are no
/// plain parts.
pub fn crank1(o: &Overpartition) -> i64 {
    if o.plain().is_empty() {
        lambda_stat(o.overlined())
    } else {
        crank(o.plain())
    }
}

/// Second residual crank. Splitting the plain parts by parity, this is the
/// crank of half the plain even subpartition when it is nonempty, else
/// [`kappa_stat`] of the overlined parts when they are nonempty, else 0.
pub fn crank2(o: &Overpartition) -> i64 {
    let t = o.to_triple();
    if !t.plain_even.is_empty() {
        crank(&t.plain_even.halve())
    } else if !t.overlined.is_empty() {
        kappa_stat(&t.overlined)
    } else {
        0
    }
}

/// M2-crank of a partition without repeated odd parts: the crank of half the
/// even subpartition when it is nonempty, else [`theta_stat`] of the odd
/// (distinct) subpartition.
pub fn m2crank(pr: &NoRepOddPair) -> i64 {
    if pr.even.is_empty() {
        theta_stat(&pr.odd_distinct)
    } else {
        crank(&pr.even.halve())
    }
}

/// M2-rank: columns minus rows of the 2-modular diagram, which is
/// `ceil(l / 2) - (number of parts)` with `l` the largest part. Panics when
/// empty.
pub fn m2rank(pr: &NoRepOddPair) -> i64 {
    assert!(!pr.is_empty(), "m2rank of the empty partition is undefined");
    let l = pr.largest().unwrap();
    i64::from(l.div_ceil(2)) - pr.num_parts() as i64
}

/// Rank of an overpartition: largest part (overlined or not) minus the total
/// number of parts. Panics when empty.
pub fn rank_over(o: &Overpartition) -> i64 {
    assert!(!o.is_empty(), "rank of the empty overpartition is undefined");
    i64::from(o.largest().unwrap()) - o.num_parts() as i64
}

/// The statistics that can be tallied by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Crank,
    Rank,
    Crank1,
    Crank2,
    M2crank,
    M2rank,
    RankOver,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Crank,
        Statistic::Rank,
        Statistic::Crank1,
        Statistic::Crank2,
        Statistic::M2crank,
        Statistic::M2rank,
        Statistic::RankOver,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Crank => "crank",
            Statistic::Rank => "rank",
            Statistic::Crank1 => "crank1",
            Statistic::Crank2 => "crank2",
            Statistic::M2crank => "m2crank",
            Statistic::M2rank => "m2rank",
            Statistic::RankOver => "rank_over",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Statistic::ALL
            .iter()
            .copied()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}
