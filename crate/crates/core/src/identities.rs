//! A registry of rank/crank identities and the machinery to check them.
//!
//! Every entry pits two independent computations against each other: the
//! left side is always tallied by brute-force enumeration of partitions,
//! overpartitions, or partitions without repeated odd parts, while the right
//! side is always extracted from a product or Eulerian series expansion.
//! A passing check therefore exercises the combinatorial definitions and the
//! series algebra at once.
//!
//! Right sides of the form `q^-1 * f(q)` are handled by expanding `f` one
//! order higher and shifting down, after confirming that the coefficient
//! about to fall off is zero; a nonzero coefficient there is reported as a
//! mismatch at that position rather than silently discarded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::genfun::SeriesName;
use crate::partitions::{blo_modified_count, count_residue, count_statistic, Statistic};
use crate::qseries::{LaurentPoly, QSeries};

/// The arithmetic progression `step * n + offset` indexing a difference
/// series: the coefficient of `q^n` looks at objects of that size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progression {
    pub step: u32,
    pub offset: u32,
}

/// One weighted residue-class count: `sum_a weights[a] * #{objects of the
/// given size with stat ≡ a (mod modulus)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffTerm {
    pub stat: Statistic,
    pub modulus: u32,
    pub weights: BTreeMap<u32, i64>,
}

/// How the enumeration side of an identity is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LhsRecipe {
    /// Coefficient of `q^n` is the full tally of the statistic at size `n`,
    /// as a Laurent polynomial in `z`.
    StatisticTable(Statistic),
    /// Like `StatisticTable(Crank1)` but tallied through the plain-parts
    /// crank with the `{1}`-redistribution convention.
    BloModifiedTable,
    /// A sum of weighted residue-class differences along a progression.
    ResidueDiff {
        terms: Vec<DiffTerm>,
        progression: Progression,
    },
}

/// One summand of a mock-theta combination: `scale * f(±q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MockTerm {
    pub scale: i64,
    pub series: SeriesName,
    pub negate_q: bool,
}

/// How the series side of an identity is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhsRecipe {
    /// A two-variable product expansion, optionally with a fixed Laurent
    /// polynomial subtracted from one coefficient (used to peel the
    /// `(z - 1) q^2` term off the raw M2 product).
    Series {
        name: SeriesName,
        subtract: Option<(usize, LaurentPoly)>,
    },
    /// A second enumeration (used where the claim equates two tallies).
    StatisticTable(Statistic),
    /// `sum_i scale_i * f_i(±q) + constant`, then shifted down by
    /// `shift_down` powers of `q`.
    MockCombo {
        terms: Vec<MockTerm>,
        constant: i64,
        shift_down: usize,
    },
}

/// A single verifiable identity.
#[derive(Debug, Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub lhs: LhsRecipe,
    pub rhs: RhsRecipe,
    /// Truncation order used when the caller does not pick one.
    pub default_order: usize,
}

/// First coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

/// Outcome of checking one identity to one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub holds: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// The weighted residue-class difference series for a single statistic:
/// coefficient of `q^n` is `sum_a weights[a] * N(a, modulus, step*n +
/// offset)` where `N` counts by enumeration.
pub fn diff_series(
    stat: Statistic,
    modulus: u32,
    weights: &BTreeMap<u32, i64>,
    progression: Progression,
    order: usize,
) -> QSeries {
    assert!(progression.step >= 1, "progression step must be positive");
    assert!(
        progression.offset < progression.step,
        "progression offset must lie below the step"
    );
    assert!(
        weights.keys().all(|&a| a < modulus),
        "weight residues must lie below the modulus"
    );
    let coeffs = (0..=order)
        .map(|n| {
            let size = progression.step * n as u32 + progression.offset;
            let counts = count_residue(size, stat, modulus);
            let mut total = BigInt::zero();
            for (a, w) in weights {
                total += BigInt::from(*w) * &counts[a];
            }
            LaurentPoly::from_terms([(0, total)])
        })
        .collect();
    QSeries::from_coeffs(coeffs)
}

fn table_series(stat: Statistic, order: usize) -> QSeries {
    let coeffs = (0..=order)
        .map(|n| count_statistic(n as u32, stat).to_laurent())
        .collect();
    QSeries::from_coeffs(coeffs)
}

fn eval_lhs(recipe: &LhsRecipe, order: usize) -> QSeries {
    match recipe {
        LhsRecipe::StatisticTable(stat) => table_series(*stat, order),
        LhsRecipe::BloModifiedTable => {
            let coeffs = (0..=order)
                .map(|n| blo_modified_count(n as u32).to_laurent())
                .collect();
            QSeries::from_coeffs(coeffs)
        }
        LhsRecipe::ResidueDiff { terms, progression } => {
            let mut sum = QSeries::zero(order);
            for t in terms {
                sum = &sum + &diff_series(t.stat, t.modulus, &t.weights, *progression, order);
            }
            sum
        }
    }
}

/// `Err` carries the mismatch produced when a shift precondition fails:
/// the coefficient about to be shifted out was nonzero.
fn eval_rhs(recipe: &RhsRecipe, order: usize) -> std::result::Result<QSeries, Mismatch> {
    match recipe {
        RhsRecipe::Series { name, subtract } => {
            let mut series = name.expand(order);
            if let Some((pos, adjustment)) = subtract {
                if *pos <= order {
                    let mut coeffs = series.coeffs().to_vec();
                    coeffs[*pos] = &coeffs[*pos] - adjustment;
                    series = QSeries::from_coeffs(coeffs);
                }
            }
            Ok(series)
        }
        RhsRecipe::StatisticTable(stat) => Ok(table_series(*stat, order)),
        RhsRecipe::MockCombo {
            terms,
            constant,
            shift_down,
        } => {
            let extended = order + shift_down;
            let mut sum = QSeries::zero(extended);
            for t in terms {
                let mut series = t.series.expand(extended);
                if t.negate_q {
                    series = series
                        .subst_neg_q()
                        .expect("mock theta series have no z variable");
                }
                sum = &sum + &series.scale(t.scale);
            }
            let sum = sum.add_scalar(*constant);
            for i in 0..*shift_down {
                if !sum.coeff(i).is_zero() {
                    return Err(Mismatch {
                        n: i,
                        lhs: LaurentPoly::zero(),
                        rhs: sum.coeff(i).clone(),
                    });
                }
            }
            Ok(sum.shift_down(*shift_down))
        }
    }
}

/// Checks `spec` to the given order, comparing coefficients `q^0 .. q^order`.
pub fn verify_spec(spec: &IdentitySpec, order: usize) -> VerificationReport {
    let rhs = match eval_rhs(&spec.rhs, order) {
        Ok(series) => series,
        Err(mismatch) => {
            return VerificationReport {
                id: spec.id.to_string(),
                order,
                holds: false,
                first_mismatch: Some(mismatch),
            }
        }
    };
    let lhs = eval_lhs(&spec.lhs, order);
    let first_mismatch = (0..=order).find_map(|n| {
        let (l, r) = (lhs.coeff(n), rhs.coeff(n));
        (l != r).then(|| Mismatch {
            n,
            lhs: l.clone(),
            rhs: r.clone(),
        })
    });
    VerificationReport {
        id: spec.id.to_string(),
        order,
        holds: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// Checks the registry entry `id` to `order` (or its default order).
pub fn verify(id: &str, order: Option<usize>) -> Result<VerificationReport> {
    let specs = registry();
    let spec = specs
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(verify_spec(spec, order.unwrap_or(spec.default_order)))
}

fn weights(pairs: &[(u32, i64)]) -> BTreeMap<u32, i64> {
    pairs.iter().copied().collect()
}

/// All thirteen identities, in a fixed reporting order.
pub fn registry() -> Vec<IdentitySpec> {
    let on = |step, offset| Progression { step, offset };
    vec![
        IdentitySpec {
            id: "thm-M1",
            description: "crank1 tally of overpartitions equals the Cbar coefficients",
            lhs: LhsRecipe::StatisticTable(Statistic::Crank1),
            rhs: RhsRecipe::Series {
                name: SeriesName::Cbar,
                subtract: None,
            },
            default_order: 30,
        },
        IdentitySpec {
            id: "thm-M2",
            description: "crank2 tally of overpartitions equals the Cbar2 coefficients",
            lhs: LhsRecipe::StatisticTable(Statistic::Crank2),
            rhs: RhsRecipe::Series {
                name: SeriesName::Cbar2,
                subtract: None,
            },
            default_order: 30,
        },
        IdentitySpec {
            id: "thm-M2crank",
            description: "m2crank tally equals the M2 coefficients once (z-1)q^2 is peeled off",
            lhs: LhsRecipe::StatisticTable(Statistic::M2crank),
            rhs: RhsRecipe::Series {
                name: SeriesName::M2,
                subtract: Some((2, LaurentPoly::from_terms([
                    (1, BigInt::from(1)),
                    (0, BigInt::from(-1)),
                ]))),
            },
            default_order: 30,
        },
        IdentitySpec {
            id: "blo-equivalence",
            description: "plain-parts crank with the {1}-redistribution equals the crank1 tally",
            lhs: LhsRecipe::BloModifiedTable,
            rhs: RhsRecipe::StatisticTable(Statistic::Crank1),
            default_order: 20,
        },
        IdentitySpec {
            id: "fifth-order-chi0",
            description: "3(N(1,5,5n)-N(2,5,5n)) - (M(0,5,5n)-M(1,5,5n)) = chi0(q) - 2",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![
                    DiffTerm {
                        stat: Statistic::Rank,
                        modulus: 5,
                        weights: weights(&[(1, 3), (2, -3)]),
                    },
                    DiffTerm {
                        stat: Statistic::Crank,
                        modulus: 5,
                        weights: weights(&[(0, -1), (1, 1)]),
                    },
                ],
                progression: on(5, 0),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 1,
                    series: SeriesName::Chi0,
                    negate_q: false,
                }],
                constant: -2,
                shift_down: 0,
            },
            default_order: 10,
        },
        IdentitySpec {
            id: "tenth-phi",
            description: "Nbar(0,5,5n+1) - Nbar(2,5,5n+1) = 2 phi(q)",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![DiffTerm {
                    stat: Statistic::RankOver,
                    modulus: 5,
                    weights: weights(&[(0, 1), (2, -1)]),
                }],
                progression: on(5, 1),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 2,
                    series: SeriesName::Phi,
                    negate_q: false,
                }],
                constant: 0,
                shift_down: 0,
            },
            default_order: 8,
        },
        IdentitySpec {
            id: "tenth-psi",
            description: "Nbar(0,5,5n+4) + Nbar(1,5,5n+4) - 2 Nbar(2,5,5n+4) = 2 psi(q) / q",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![DiffTerm {
                    stat: Statistic::RankOver,
                    modulus: 5,
                    weights: weights(&[(0, 1), (1, 1), (2, -2)]),
                }],
                progression: on(5, 4),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 2,
                    series: SeriesName::Psi,
                    negate_q: false,
                }],
                constant: 0,
                shift_down: 1,
            },
            default_order: 8,
        },
        IdentitySpec {
            id: "crankdiff-3phi",
            description: "(Nbar(0)-Nbar(1)) - (Mbar(0)-Mbar(1)) on 5n+1, mod 5, = 3 phi(q)",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![
                    DiffTerm {
                        stat: Statistic::RankOver,
                        modulus: 5,
                        weights: weights(&[(0, 1), (1, -1)]),
                    },
                    DiffTerm {
                        stat: Statistic::Crank1,
                        modulus: 5,
                        weights: weights(&[(0, -1), (1, 1)]),
                    },
                ],
                progression: on(5, 1),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 3,
                    series: SeriesName::Phi,
                    negate_q: false,
                }],
                constant: 0,
                shift_down: 0,
            },
            default_order: 8,
        },
        IdentitySpec {
            id: "crankdiff-3psi",
            description: "(Nbar(1)-Nbar(2)) - (Mbar(0)-Mbar(2)) on 5n+4, mod 5, = 3 psi(q) / q",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![
                    DiffTerm {
                        stat: Statistic::RankOver,
                        modulus: 5,
                        weights: weights(&[(1, 1), (2, -1)]),
                    },
                    DiffTerm {
                        stat: Statistic::Crank1,
                        modulus: 5,
                        weights: weights(&[(0, -1), (2, 1)]),
                    },
                ],
                progression: on(5, 4),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 3,
                    series: SeriesName::Psi,
                    negate_q: false,
                }],
                constant: 0,
                shift_down: 1,
            },
            default_order: 8,
        },
        IdentitySpec {
            id: "m2rank-X",
            description: "N2(0,5,5n) - N2(2,5,5n) = X(-q)",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![DiffTerm {
                    stat: Statistic::M2rank,
                    modulus: 5,
                    weights: weights(&[(0, 1), (2, -1)]),
                }],
                progression: on(5, 0),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 1,
                    series: SeriesName::X,
                    negate_q: true,
                }],
                constant: 0,
                shift_down: 0,
            },
            default_order: 10,
        },
        IdentitySpec {
            id: "m2rank-chi",
            description: "N2(2,5,5n+4) - N2(1,5,5n+4) = chi(-q) / q",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![DiffTerm {
                    stat: Statistic::M2rank,
                    modulus: 5,
                    weights: weights(&[(1, -1), (2, 1)]),
                }],
                progression: on(5, 4),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 1,
                    series: SeriesName::Chi,
                    negate_q: true,
                }],
                constant: 0,
                shift_down: 1,
            },
            default_order: 9,
        },
        IdentitySpec {
            id: "m2-combo-X",
            description: "2(N2(0)-N2(1)) + (M2(0)-M2(1)) on 5n, mod 5, = 3 X(-q)",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![
                    DiffTerm {
                        stat: Statistic::M2rank,
                        modulus: 5,
                        weights: weights(&[(0, 2), (1, -2)]),
                    },
                    DiffTerm {
                        stat: Statistic::M2crank,
                        modulus: 5,
                        weights: weights(&[(0, 1), (1, -1)]),
                    },
                ],
                progression: on(5, 0),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 3,
                    series: SeriesName::X,
                    negate_q: true,
                }],
                constant: 0,
                shift_down: 0,
            },
            default_order: 10,
        },
        IdentitySpec {
            id: "m2-combo-chi",
            description: "2(N2(0)-N2(1)) - (M2(0)-M2(1)) on 5n+4, mod 5, = chi(-q) / q",
            lhs: LhsRecipe::ResidueDiff {
                terms: vec![
                    DiffTerm {
                        stat: Statistic::M2rank,
                        modulus: 5,
                        weights: weights(&[(0, 2), (1, -2)]),
                    },
                    DiffTerm {
                        stat: Statistic::M2crank,
                        modulus: 5,
                        weights: weights(&[(0, -1), (1, 1)]),
                    },
                ],
                progression: on(5, 4),
            },
            rhs: RhsRecipe::MockCombo {
                terms: vec![MockTerm {
                    scale: 1,
                    series: SeriesName::Chi,
                    negate_q: true,
                }],
                constant: 0,
                shift_down: 1,
            },
            default_order: 9,
        },
    ]
}
