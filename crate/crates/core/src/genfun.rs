//! Closed-form generating functions, expanded as truncated `q`-series.
//!
//! The two-variable functions keep track of a statistic through the exponent
//! of `z`:
//!
//! * `C` — crank: `(q;q)_inf / ((zq;q)_inf (q/z;q)_inf)`;
//! * `Cbar` — first residual crank: the same quotient with numerator
//!   `(q^2;q^2)_inf`;
//! * `Cbar2` — second residual crank:
//!   `(-q;q)_inf (q^2;q^2)_inf / ((q;q^2)_inf (zq^2;q^2)_inf (q^2/z;q^2)_inf)`;
//! * `M2` — M2-crank:
//!   `(q^2;q^2)_inf (-q;q^2)_inf / ((zq^2;q^2)_inf (q^2/z;q^2)_inf)`,
//!   expanded as printed — callers wanting a clean tally must adjust the
//!   `q^2` coefficient by `z - 1`;
//! * `N2` — M2-rank:
//!   `sum_n q^(n^2) (-q;q^2)_n / ((zq^2;q^2)_n (q^2/z;q^2)_n)`.
//!
//! The one-variable sums (`chi0`, `phi`, `psi`, `X`, `chi`) are Eulerian
//! series in `q` alone; see [`mock_theta`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::{poch_product, PochSpec, QSeries};

/// The ten named series this crate can expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    C,
    Cbar,
    Cbar2,
    M2,
    N2,
    Chi0,
    Phi,
    Psi,
    X,
    Chi,
}

impl SeriesName {
    pub const ALL: [SeriesName; 10] = [
        SeriesName::C,
        SeriesName::Cbar,
        SeriesName::Cbar2,
        SeriesName::M2,
        SeriesName::N2,
        SeriesName::Chi0,
        SeriesName::Phi,
        SeriesName::Psi,
        SeriesName::X,
        SeriesName::Chi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SeriesName::C => "C",
            SeriesName::Cbar => "Cbar",
            SeriesName::Cbar2 => "Cbar2",
            SeriesName::M2 => "M2",
            SeriesName::N2 => "N2",
            SeriesName::Chi0 => "chi0",
            SeriesName::Phi => "phi",
            SeriesName::Psi => "psi",
            SeriesName::X => "X",
            SeriesName::Chi => "chi",
        }
    }

    /// True for the series that carry a `z` variable.
    pub fn is_two_variable(&self) -> bool {
        matches!(
            self,
            SeriesName::C | SeriesName::Cbar | SeriesName::Cbar2 | SeriesName::M2 | SeriesName::N2
        )
    }

    /// Expands the series through `q^order`.
    pub fn expand(&self, order: usize) -> QSeries {
        match self {
            SeriesName::C => series_c(order),
            SeriesName::Cbar => series_cbar(order),
            SeriesName::Cbar2 => series_cbar2(order),
            SeriesName::M2 => series_m2(order),
            SeriesName::N2 => series_n2(order),
            SeriesName::Chi0 => chi0_sum(order),
            SeriesName::Phi => phi_sum(order),
            SeriesName::Psi => psi_sum(order),
            SeriesName::X => x_sum(order),
            SeriesName::Chi => chi_sum(order),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        SeriesName::ALL
            .iter()
            .copied()
            .find(|name| name.name().to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

fn inverted(spec: &PochSpec, order: usize) -> QSeries {
    poch_product(spec, order)
        .invert()
        .expect("pochhammer products have constant term 1")
}

/// Crank generating function `(q;q)_inf / ((zq;q)_inf (q/z;q)_inf)`.
pub fn series_c(order: usize) -> QSeries {
    let num = poch_product(&PochSpec::infinite(1, 0, 1, 1), order);
    let inv = &inverted(&PochSpec::infinite(1, 1, 1, 1), order)
        * &inverted(&PochSpec::infinite(1, -1, 1, 1), order);
    &num * &inv
}

/// First residual crank generating function
/// `(q^2;q^2)_inf / ((zq;q)_inf (q/z;q)_inf)`.
pub fn series_cbar(order: usize) -> QSeries {
    let num = poch_product(&PochSpec::infinite(1, 0, 2, 2), order);
    let inv = &inverted(&PochSpec::infinite(1, 1, 1, 1), order)
        * &inverted(&PochSpec::infinite(1, -1, 1, 1), order);
    &num * &inv
}

/// Second residual crank generating function
/// `(-q;q)_inf (q^2;q^2)_inf / ((q;q^2)_inf (zq^2;q^2)_inf (q^2/z;q^2)_inf)`.
pub fn series_cbar2(order: usize) -> QSeries {
    let num = &poch_product(&PochSpec::infinite(-1, 0, 1, 1), order)
        * &poch_product(&PochSpec::infinite(1, 0, 2, 2), order);
    let inv = &(&inverted(&PochSpec::infinite(1, 0, 1, 2), order)
        * &inverted(&PochSpec::infinite(1, 1, 2, 2), order))
        * &inverted(&PochSpec::infinite(1, -1, 2, 2), order);
    &num * &inv
}

/// M2-crank generating function
/// `(q^2;q^2)_inf (-q;q^2)_inf / ((zq^2;q^2)_inf (q^2/z;q^2)_inf)`,
/// expanded exactly as written. Its `q^2` coefficient is `z - 1 + 1/z`,
/// which overshoots the honest tally `1/z` by `z - 1`; consumers that want
/// tally semantics subtract that themselves.
pub fn series_m2(order: usize) -> QSeries {
    let num = &poch_product(&PochSpec::infinite(1, 0, 2, 2), order)
        * &poch_product(&PochSpec::infinite(-1, 0, 1, 2), order);
    let inv = &inverted(&PochSpec::infinite(1, 1, 2, 2), order)
        * &inverted(&PochSpec::infinite(1, -1, 2, 2), order);
    &num * &inv
}

/// M2-rank generating function
/// `sum_{n>=0} q^(n^2) (-q;q^2)_n / ((zq^2;q^2)_n (q^2/z;q^2)_n)`.
pub fn series_n2(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    let mut n = 0usize;
    loop {
        let lead = n * n;
        if lead > order {
            break;
        }
        let num = poch_product(&PochSpec::finite(-1, 0, 1, 2, n), order);
        let inv = &inverted(&PochSpec::finite(1, 1, 2, 2, n), order)
            * &inverted(&PochSpec::finite(1, -1, 2, 2, n), order);
        sum = &sum + &(&num * &inv).shift_up(lead);
        n += 1;
    }
    sum
}

/// `chi0 = sum_{n>=0} q^n / (q^(n+1);q)_n`.
fn chi0_sum(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    for n in 0..=order {
        let term = inverted(&PochSpec::finite(1, 0, n + 1, 1, n), order);
        sum = &sum + &term.shift_up(n);
    }
    sum
}

/// `phi = sum_{n>=0} q^(n(n+1)/2) / (q;q^2)_(n+1)`.
fn phi_sum(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    let mut n = 0usize;
    loop {
        let lead = n * (n + 1) / 2;
        if lead > order {
            break;
        }
        let term = inverted(&PochSpec::finite(1, 0, 1, 2, n + 1), order);
        sum = &sum + &term.shift_up(lead);
        n += 1;
    }
    sum
}

/// `psi = sum_{n>=0} q^((n+1)(n+2)/2) / (q;q^2)_(n+1)`.
fn psi_sum(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    let mut n = 0usize;
    loop {
        let lead = (n + 1) * (n + 2) / 2;
        if lead > order {
            break;
        }
        let term = inverted(&PochSpec::finite(1, 0, 1, 2, n + 1), order);
        sum = &sum + &term.shift_up(lead);
        n += 1;
    }
    sum
}

/// `X = sum_{n>=0} (-1)^n q^(n^2) / (-q;q)_(2n)`.
fn x_sum(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    let mut n = 0usize;
    loop {
        let lead = n * n;
        if lead > order {
            break;
        }
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let term = inverted(&PochSpec::finite(-1, 0, 1, 1, 2 * n), order);
        sum = &sum + &term.shift_up(lead).scale(sign);
        n += 1;
    }
    sum
}

/// `chi = sum_{n>=0} (-1)^n q^((n+1)^2) / (-q;q)_(2n+1)`.
fn chi_sum(order: usize) -> QSeries {
    let mut sum = QSeries::zero(order);
    let mut n = 0usize;
    loop {
        let lead = (n + 1) * (n + 1);
        if lead > order {
            break;
        }
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let term = inverted(&PochSpec::finite(-1, 0, 1, 1, 2 * n + 1), order);
        sum = &sum + &term.shift_up(lead).scale(sign);
        n += 1;
    }
    sum
}

/// Expands one of the five one-variable sums. Two-variable names are
/// rejected with [`Error::NotSingleVariable`].
pub fn mock_theta(name: SeriesName, order: usize) -> Result<QSeries> {
    if name.is_two_variable() {
        return Err(Error::NotSingleVariable);
    }
    Ok(name.expand(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::LaurentPoly;
    use num_bigint::BigInt;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn constants(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_constant(), "expected a pure power series");
                i64::try_from(c.coeff(0)).unwrap()
            })
            .collect()
    }

    #[test]
    fn crank_series_has_the_classical_first_coefficient() {
        let c = series_c(3);
        assert!(c.coeff(0).is_one());
        assert_eq!(*c.coeff(1), lp(&[(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(*c.coeff(2), lp(&[(-2, 1), (2, 1)]));
    }

    #[test]
    fn cbar_small_coefficients() {
        let c = series_cbar(2);
        assert!(c.coeff(0).is_one());
        assert_eq!(*c.coeff(1), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(*c.coeff(2), lp(&[(-2, 1), (-1, 1), (1, 1), (2, 1)]));
    }

    #[test]
    fn cbar2_small_coefficients() {
        let c = series_cbar2(4);
        assert!(c.coeff(0).is_one());
        assert_eq!(*c.coeff(1), lp(&[(0, 2)]));
        assert_eq!(*c.coeff(2), lp(&[(-1, 1), (0, 2), (1, 1)]));
        assert_eq!(
            *c.coeff(4),
            lp(&[(-2, 1), (-1, 3), (0, 6), (1, 3), (2, 1)])
        );
    }

    #[test]
    fn m2_series_carries_its_quadratic_anomaly() {
        let m = series_m2(4);
        assert!(m.coeff(0).is_one());
        assert!(m.coeff(1).is_one());
        assert_eq!(*m.coeff(2), lp(&[(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(*m.coeff(3), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(*m.coeff(4), lp(&[(-2, 1), (0, 1), (2, 1)]));
    }

    #[test]
    fn n2_small_coefficients() {
        let n = series_n2(4);
        assert!(n.coeff(0).is_one());
        assert!(n.coeff(1).is_one());
        assert!(n.coeff(2).is_one());
        assert_eq!(*n.coeff(3), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(*n.coeff(4), lp(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn two_variable_series_are_symmetric_in_z() {
        for name in SeriesName::ALL.iter().filter(|n| n.is_two_variable()) {
            assert!(name.expand(12).is_z_symmetric(), "{name}");
        }
    }

    #[test]
    fn chi0_expansion() {
        assert_eq!(constants(&chi0_sum(3)), vec![1, 1, 1, 2]);
    }

    #[test]
    fn phi_expansion() {
        assert_eq!(constants(&phi_sum(3)), vec![1, 2, 2, 3]);
    }

    #[test]
    fn psi_expansion() {
        assert_eq!(constants(&psi_sum(4)), vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn x_expansion() {
        assert_eq!(constants(&x_sum(4)), vec![1, -1, 1, 0, 1]);
    }

    #[test]
    fn chi_expansion() {
        assert_eq!(constants(&chi_sum(5)), vec![0, 1, -1, 1, -2, 2]);
    }

    #[test]
    fn mock_theta_rejects_two_variable_names() {
        assert!(matches!(
            mock_theta(SeriesName::C, 5),
            Err(Error::NotSingleVariable)
        ));
        let via_name = mock_theta(SeriesName::Chi0, 3).unwrap();
        assert_eq!(via_name, chi0_sum(3));
    }

    #[test]
    fn names_round_trip_case_insensitively() {
        for name in SeriesName::ALL {
            assert_eq!(name.name().parse::<SeriesName>().unwrap(), name);
            assert_eq!(
                name.name().to_uppercase().parse::<SeriesName>().unwrap(),
                name
            );
        }
        assert!(matches!(
            "zeta".parse::<SeriesName>(),
            Err(Error::UnknownSeries(_))
        ));
    }
}
