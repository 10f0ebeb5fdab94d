//! Truncated q-series with Laurent-polynomial coefficients.
//!
//! The working representation throughout the crate is
//!
//! ```text
//!     sum_{n=0}^{N} c_n(z) q^n   (mod q^{N+1})
//! ```
//!
//! where each `c_n(z)` is a [`LaurentPoly`]: a finite sum of integer
//! multiples of powers `z^m`, `m` ranging over (possibly negative) integers.
//! Negative powers of `q` are never represented; identities that are stated
//! with a `q^{-1}` prefactor are normalized by the consumer before they reach
//! this module.
//!
//! [`PochSpec`] describes a q-Pochhammer symbol `(c z^e q^b; q^d)_n` with
//! `n` finite or infinite, and [`poch_product`] expands it to a requested
//! order. All generating functions in [`crate::genfun`] are assembled from
//! these products with [`QSeries`] ring operations and [`QSeries::invert`].

mod laurent;
mod poch;
mod series;

pub use laurent::LaurentPoly;
pub use poch::{poch_product, PochCount, PochSpec};
pub use series::QSeries;
