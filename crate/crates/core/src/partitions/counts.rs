use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::{
    crank, crank1, crank2, m2crank, m2rank, no_rep_odd_pairs_of, overpartitions_of, partitions_of,
    rank, rank_over, PartitionClass, Statistic,
};
use crate::qseries::LaurentPoly;

/// A tally of one statistic over the objects of a fixed size `n`: how many
/// objects attain each value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u32,
    pub statistic: String,
    pub counts: BTreeMap<i64, BigInt>,
}

impl CountTable {
    /// The tally as a Laurent polynomial in `z` (value `m` becomes `z^m`).
    /// Entries whose count is zero are dropped.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.counts.iter().map(|(&m, c)| (m, c.clone())))
    }

    /// Total number of objects tallied.
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

fn bump(counts: &mut BTreeMap<i64, BigInt>, value: i64, delta: i64) {
    *counts.entry(value).or_insert_with(BigInt::zero) += delta;
}

/// Tallies `stat` over every object of size `n`. The underlying family is
/// implied by the statistic: ordinary partitions for `crank` and `rank`,
/// overpartitions for `crank1`, `crank2`, and `rank_over`, and partitions
/// without repeated odd parts for `m2crank` and `m2rank`.
///
/// At `n = 0` the single empty object is scored as 0 for every statistic,
/// so the table is always `{0: 1}` there.
pub fn count_statistic(n: u32, stat: Statistic) -> CountTable {
    let mut counts = BTreeMap::new();
    if n == 0 {
        counts.insert(0, BigInt::one());
    } else {
        match stat {
            Statistic::Crank | Statistic::Rank => {
                for p in partitions_of(n, PartitionClass::Unrestricted) {
                    let v = match stat {
                        Statistic::Crank => crank(&p),
                        _ => rank(&p),
                    };
                    bump(&mut counts, v, 1);
                }
            }
            Statistic::Crank1 | Statistic::Crank2 | Statistic::RankOver => {
                for o in overpartitions_of(n) {
                    let v = match stat {
                        Statistic::Crank1 => crank1(&o),
                        Statistic::Crank2 => crank2(&o),
                        _ => rank_over(&o),
                    };
                    bump(&mut counts, v, 1);
                }
            }
            Statistic::M2crank | Statistic::M2rank => {
                for pr in no_rep_odd_pairs_of(n) {
                    let v = match stat {
                        Statistic::M2crank => m2crank(&pr),
                        _ => m2rank(&pr),
                    };
                    bump(&mut counts, v, 1);
                }
            }
        }
    }
    CountTable {
        n,
        statistic: stat.name().to_string(),
        counts,
    }
}

/// Folds the tally of `stat` at size `n` into residue classes modulo
/// `modulus`. Every residue `0..modulus` is present in the result, zeros
/// included.
pub fn count_residue(n: u32, stat: Statistic, modulus: u32) -> BTreeMap<u32, BigInt> {
    assert!(modulus >= 1, "modulus must be positive");
    let table = count_statistic(n, stat);
    let mut out: BTreeMap<u32, BigInt> =
        (0..modulus).map(|r| (r, BigInt::zero())).collect();
    for (value, c) in &table.counts {
        let r = value.rem_euclid(i64::from(modulus)) as u32;
        *out.get_mut(&r).unwrap() += c;
    }
    out
}

/// Tallies the crank of the plain parts over the overpartitions of `n`,
/// with two conventions for degenerate plain parts:
///
/// * no plain parts — contributes +1 at 0;
/// * plain parts exactly one 1 — contributes -1 at 0 and +1 at each of ±1.
///
/// Values that were touched but net to zero are kept in the table (so at
/// `n = 1` the table reads `{-1: 1, 0: 0, 1: 1}`); [`CountTable::to_laurent`]
/// drops them.
pub fn blo_modified_count(n: u32) -> CountTable {
    let mut counts = BTreeMap::new();
    for o in overpartitions_of(n) {
        let plain = o.plain();
        if plain.is_empty() {
            bump(&mut counts, 0, 1);
        } else if plain.parts() == [1] {
            bump(&mut counts, 0, -1);
            bump(&mut counts, -1, 1);
            bump(&mut counts, 1, 1);
        } else {
            bump(&mut counts, crank(plain), 1);
        }
    }
    CountTable {
        n,
        statistic: "blo".to_string(),
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(pairs: &[(i64, i64)]) -> BTreeMap<i64, BigInt> {
        pairs.iter().map(|&(m, c)| (m, BigInt::from(c))).collect()
    }

    fn residues(pairs: &[(u32, i64)]) -> BTreeMap<u32, BigInt> {
        pairs.iter().map(|&(r, c)| (r, BigInt::from(c))).collect()
    }

    #[test]
    fn size_zero_is_concentrated_at_zero() {
        for st in Statistic::ALL {
            assert_eq!(count_statistic(0, st).counts, table(&[(0, 1)]));
        }
    }

    #[test]
    fn crank_table_of_one_comes_from_enumeration() {
        // The lone partition of 1 has crank -1; the generating function's
        // constant-adjusted q^1 coefficient is a different object.
        assert_eq!(count_statistic(1, Statistic::Crank).counts, table(&[(-1, 1)]));
    }

    #[test]
    fn crank1_tables() {
        assert_eq!(
            count_statistic(3, Statistic::Crank1).counts,
            table(&[(-3, 1), (-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1), (3, 1)])
        );
        assert_eq!(
            count_statistic(4, Statistic::Crank1).counts,
            table(&[
                (-4, 1),
                (-3, 1),
                (-2, 2),
                (-1, 2),
                (0, 2),
                (1, 2),
                (2, 2),
                (3, 1),
                (4, 1)
            ])
        );
    }

    #[test]
    fn crank2_table_of_four() {
        assert_eq!(
            count_statistic(4, Statistic::Crank2).counts,
            table(&[(-2, 1), (-1, 3), (0, 6), (1, 3), (2, 1)])
        );
    }

    #[test]
    fn m2_tables() {
        assert_eq!(
            count_statistic(4, Statistic::M2crank).counts,
            table(&[(-2, 1), (0, 1), (2, 1)])
        );
        assert_eq!(
            count_statistic(5, Statistic::M2crank).counts,
            table(&[(-2, 1), (-1, 1), (1, 1), (2, 1)])
        );
        assert_eq!(
            count_statistic(5, Statistic::M2rank).counts,
            table(&[(-2, 1), (0, 2), (2, 1)])
        );
    }

    #[test]
    fn rank_over_table_of_four() {
        assert_eq!(
            count_statistic(4, Statistic::RankOver).counts,
            table(&[(-3, 2), (-1, 4), (0, 2), (1, 4), (3, 2)])
        );
    }

    #[test]
    fn totals_match_family_sizes() {
        // Overpartition counts 1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232 and
        // no-repeated-odd counts 1, 1, 1, 2, 3, 4, 5, 7, 10, 13.
        let overs = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232];
        for (n, &total) in overs.iter().enumerate() {
            let t = count_statistic(n as u32, Statistic::Crank1);
            assert_eq!(t.total(), BigInt::from(total), "n = {n}");
            assert_eq!(
                count_statistic(n as u32, Statistic::RankOver).total(),
                BigInt::from(total),
                "n = {n}"
            );
        }
        let nro = [1, 1, 1, 2, 3, 4, 5, 7, 10, 13];
        for (n, &total) in nro.iter().enumerate() {
            let t = count_statistic(n as u32, Statistic::M2rank);
            assert_eq!(t.total(), BigInt::from(total), "n = {n}");
        }
    }

    #[test]
    fn residue_fold_covers_every_class() {
        assert_eq!(
            count_residue(1, Statistic::RankOver, 5),
            residues(&[(0, 2), (1, 0), (2, 0), (3, 0), (4, 0)])
        );
        assert_eq!(
            count_residue(4, Statistic::RankOver, 5),
            residues(&[(0, 2), (1, 4), (2, 2), (3, 2), (4, 4)])
        );
        assert_eq!(
            count_residue(5, Statistic::M2rank, 5),
            residues(&[(0, 2), (1, 0), (2, 1), (3, 1), (4, 0)])
        );
        assert_eq!(
            count_residue(5, Statistic::M2crank, 5),
            residues(&[(0, 0), (1, 1), (2, 1), (3, 1), (4, 1)])
        );
    }

    #[test]
    fn residue_fold_sums_to_table_total() {
        for n in 0..10 {
            for m in [2, 3, 5, 7] {
                let folded: BigInt =
                    count_residue(n, Statistic::Crank1, m).values().sum();
                assert_eq!(folded, count_statistic(n, Statistic::Crank1).total());
            }
        }
    }

    #[test]
    fn blo_keeps_touched_zeros() {
        assert_eq!(
            blo_modified_count(1).counts,
            table(&[(-1, 1), (0, 0), (1, 1)])
        );
        assert_eq!(
            blo_modified_count(1).to_laurent(),
            LaurentPoly::from_terms([(-1, BigInt::one()), (1, BigInt::one())])
        );
    }

    #[test]
    fn blo_matches_crank1_after_dropping_zeros() {
        for n in 0..=8 {
            assert_eq!(
                blo_modified_count(n).to_laurent(),
                count_statistic(n, Statistic::Crank1).to_laurent(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn blo_at_zero_counts_the_empty_overpartition() {
        assert_eq!(blo_modified_count(0).counts, table(&[(0, 1)]));
    }

    #[test]
    fn table_symmetry_of_self_conjugate_statistics() {
        for n in 1..=9 {
            for st in [Statistic::Crank1, Statistic::Crank2, Statistic::RankOver] {
                let t = count_statistic(n, st);
                for (m, c) in &t.counts {
                    assert_eq!(
                        t.counts.get(&-m).unwrap_or(&BigInt::zero()).clone(),
                        c.clone(),
                        "{st} at n = {n}, m = {m}"
                    );
                }
            }
        }
    }
}
