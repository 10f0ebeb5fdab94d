//! Exact arithmetic for crank statistics of overpartitions.
//!
//! This crate has two halves that deliberately know nothing about each other:
//!
//! * a combinatorial half ([`partitions`]) that enumerates partitions,
//!   overpartitions and partitions without repeated odd parts, and evaluates
//!   statistics on them (crank, rank, the residual cranks `crank1`/`crank2`,
//!   the M2-crank and M2-rank, the overpartition rank);
//! * a formal half ([`qseries`], [`genfun`]) that expands the matching
//!   two-variable generating functions and a handful of fifth- and
//!   tenth-order mock theta functions as truncated power series in `q`
//!   whose coefficients are Laurent polynomials in `z` over `BigInt`.
//!
//! The [`identities`] module is the bridge: a registry of identities, each
//! with one side built by brute-force counting and the other by series
//! expansion, compared coefficient by coefficient. Everything is exact —
//! no floats, no modular shortcuts — so a reported match at order `N` is a
//! proof for the coefficients it covers.

pub mod genfun;
pub mod identities;
pub mod partitions;
pub mod qseries;

mod error;

pub use error::{Error, Result};
pub use genfun::{
    mock_theta, series_c, series_cbar, series_cbar2, series_m2, series_n2, SeriesName,
};
pub use identities::{
    diff_series, registry, verify, verify_spec, DiffTerm, IdentitySpec, LhsRecipe, Mismatch,
    MockTerm, Progression, RhsRecipe, VerificationReport,
};
pub use partitions::{
    blo_modified_count, count_residue, count_statistic, crank, crank1, crank2, kappa_stat,
    lambda_stat, m2crank, m2rank, no_rep_odd_pairs_of, overpartitions_of, partitions_of, rank,
    rank_over, theta_stat, CountTable, NoRepOddPair, OverTriple, Overpartition, Partition,
    PartitionClass, Statistic,
};
pub use qseries::{poch_product, LaurentPoly, PochCount, PochSpec, QSeries};
