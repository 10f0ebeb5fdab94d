use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Laurent polynomial in `z` with `BigInt` coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so the map is empty exactly when the polynomial is zero and
/// structural equality is semantic equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// The single term `c * z^exp` (zero if `c == 0`).
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, BigInt::from(c));
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = Self::zero();
        for (exp, c) in pairs {
            p.add_term(exp, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the only possible exponent is zero, i.e. there is no actual
    /// `z`-dependence. The zero polynomial counts as constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// The coefficient of `z^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Sorted `(exponent, coefficient)` pairs; the interchange format used by
    /// serializers and reports.
    pub fn pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Adds `c * z^exp` in place.
    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// In-place `self += factor * z^shift * other`; the workhorse behind
    /// Pochhammer factor multiplication.
    pub fn add_shifted(&mut self, other: &Self, shift: i64, factor: i64) {
        if factor == 0 {
            return;
        }
        let factor = BigInt::from(factor);
        for (exp, c) in &other.terms {
            self.add_term(exp + shift, &(c * &factor));
        }
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero();
        out.add_shifted(self, 0, factor);
        out
    }

    /// Substitutes `z -> 1/z`, mirroring every exponent.
    pub fn subst_z_inv(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates at `z = 1`, i.e. sums all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&exp, c) in &rhs.terms {
            self.add_term(exp, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&exp, c) in &rhs.terms {
            out.add_term(exp, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        &LaurentPoly::zero() - self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form in ascending powers of `z`, e.g. `z^-1 - 1 + z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (exp, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (e, true) => write!(f, "z^{e}")?,
                (e, false) => write!(f, "{mag}*z^{e}")?,
            }
        }
        Ok(())
    }
}
