use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::qseries::LaurentPoly;

/// A power series in `q` truncated at a fixed order `N`: the coefficients of
/// `q^0 .. q^N` are stored and everything beyond is unknown, so the value is
/// exact modulo `q^{N+1}`.
///
/// Binary operations require both operands to share the same order and panic
/// otherwise — silently aligning truncations would let wrong precision
/// propagate as wrong answers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<LaurentPoly>,
}

impl QSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Wraps an explicit coefficient vector `[c_0, .., c_N]`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least q^0");
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `q^n`. Panics if `n` exceeds the truncation order:
    /// that coefficient was never computed and has no meaningful value.
    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        assert!(
            n <= self.order(),
            "coefficient q^{n} is out of range for a series of order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Forgets coefficients above `order` (which must not exceed the current
    /// order). Truncation commutes with every ring operation here, a fact the
    /// test suite exercises.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplicative inverse via the usual recurrence
    /// `t_n = -sum_{i=1..n} s_i t_{n-i}`, valid over integer coefficients
    /// exactly when the constant term is 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let mut inv = Vec::with_capacity(self.coeffs.len());
        inv.push(LaurentPoly::one());
        for n in 1..=self.order() {
            let mut t = LaurentPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    t += &-&(&self.coeffs[i] * &inv[n - i]);
                }
            }
            inv.push(t);
        }
        Ok(QSeries { coeffs: inv })
    }

    /// Extracts the arithmetic progression `step*n + offset`: coefficient `n`
    /// of the result is coefficient `step*n + offset` of `self`. The result
    /// is truncated at `floor((N - offset) / step)`.
    pub fn dissect(&self, step: usize, offset: usize) -> Self {
        assert!(step >= 1 && offset < step, "dissection needs 0 <= offset < step");
        assert!(offset <= self.order(), "dissection offset beyond truncation");
        let coeffs = (0..=(self.order() - offset) / step)
            .map(|n| self.coeffs[step * n + offset].clone())
            .collect();
        QSeries { coeffs }
    }

    /// Substitutes `q -> -q`, i.e. negates every odd coefficient. Only legal
    /// for series with no `z`-dependence, where the substitution is the usual
    /// one on one-variable series.
    pub fn subst_neg_q(&self) -> Result<Self> {
        if !self.is_single_variable() {
            return Err(Error::NotSingleVariable);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
            .collect();
        Ok(QSeries { coeffs })
    }

    /// Substitutes `q -> q^k` (`k >= 1`). A series exact mod `q^{N+1}`
    /// determines the result exactly mod `q^{k(N+1)}`, so the output order is
    /// `k*(N+1) - 1`.
    pub fn subst_q_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut coeffs = vec![LaurentPoly::zero(); k * (self.order() + 1)];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[k * n] = c.clone();
        }
        QSeries { coeffs }
    }

    /// Multiplies by `q^k`, keeping the order: top coefficients fall off the
    /// truncation edge.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len()];
        if k <= self.order() {
            coeffs[k..].clone_from_slice(&self.coeffs[..self.coeffs.len() - k]);
        }
        QSeries { coeffs }
    }

    /// Divides by `q^k`. The dropped coefficients must all be zero — negative
    /// powers of `q` are not representable — and callers are expected to have
    /// checked that; this panics otherwise.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "shift below q^0");
        assert!(
            self.coeffs[..k].iter().all(LaurentPoly::is_zero),
            "shift_down would drop a nonzero coefficient"
        );
        QSeries {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, factor: i64) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Adds an integer constant (to the `q^0` coefficient).
    pub fn add_scalar(&self, c: i64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + &LaurentPoly::constant(c);
        out
    }

    /// In-place multiplication by the two-term factor `1 - scalar*z^{z_exp}*q^{q_exp}`.
    ///
    /// This is the building block of Pochhammer products; iterating from the
    /// top keeps the update order-correct without a scratch buffer.
    pub(crate) fn mul_factor(&mut self, scalar: i64, z_exp: i64, q_exp: usize) {
        if q_exp > self.order() || scalar == 0 {
            return;
        }
        for n in (q_exp..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_shifted(&lo[n - q_exp], z_exp, -scalar);
        }
    }

    /// True when no coefficient involves `z`.
    pub fn is_single_variable(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_constant)
    }

    /// True when every coefficient is invariant under `z -> 1/z`.
    pub fn is_z_symmetric(&self) -> bool {
        self.coeffs.iter().all(|c| c.subst_z_inv() == *c)
    }

    /// Coefficient-wise evaluation at `z = 1`, giving a plain integer series.
    pub fn eval_at_z_one(&self) -> Vec<num_bigint::BigInt> {
        self.coeffs.iter().map(LaurentPoly::eval_at_one).collect()
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert!(
            self.order() == rhs.order(),
            "series order mismatch: {} vs {}",
            self.order(),
            rhs.order()
        );
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.assert_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        QSeries { coeffs }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.assert_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        QSeries { coeffs }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        &QSeries::zero(self.order()) - self
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.assert_same_order(rhs);
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.coeffs.len() - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        QSeries { coeffs }
    }
}

impl fmt::Display for QSeries {
    /// One-line form such as `1 + (z^-1 - 1 + z)*q + O(q^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            if n == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                if c.terms().count() == 1 {
                    write!(f, "{c}*")?;
                } else {
                    write!(f, "({c})*")?;
                }
            }
            if n == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{n}")?;
            }
        }
        if wrote {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.order() + 1)
    }
}
