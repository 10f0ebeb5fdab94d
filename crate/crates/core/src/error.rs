use thiserror::Error;

/// Errors reported by fallible operations in this crate.
///
/// Precondition violations that can only arise from caller bugs (mismatched
/// truncation orders, statistics evaluated on the empty partition, and so on)
/// panic instead; see the individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `QSeries::invert` requires constant term exactly 1 so that the inverse
    /// stays over integer coefficients.
    #[error("series is not invertible: constant term must be 1")]
    NotInvertible,
    /// The operation only makes sense for series free of `z`.
    #[error("series has z-dependent coefficients where a pure q-series is required")]
    NotSingleVariable,
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
