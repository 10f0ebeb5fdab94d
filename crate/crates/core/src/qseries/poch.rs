use crate::qseries::QSeries;

/// Number of factors in a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochCount {
    Finite(usize),
    Infinite,
}

/// Description of a q-Pochhammer symbol `(a; q^d)_n` with `a = c z^e q^b`:
///
/// ```text
///     product over k of (1 - c * z^e * q^{b + k*d}),
/// ```
///
/// `k` running over `0..n` (or forever). Requiring `b >= 1` and `d >= 1`
/// keeps every factor of the form `1 - (higher-order term)`, so products are
/// well defined under truncation and have constant term 1.
///
/// Examples: `(q; q)_inf` is `{scalar: 1, z_exp: 0, q_start: 1, q_step: 1}`,
/// `(-q; q^2)_n` is `{scalar: -1, z_exp: 0, q_start: 1, q_step: 2}` with
/// `PochCount::Finite(n)`, and `(z q^2; q^2)_inf` is
/// `{scalar: 1, z_exp: 1, q_start: 2, q_step: 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    pub scalar: i64,
    pub z_exp: i64,
    pub q_start: usize,
    pub q_step: usize,
    pub count: PochCount,
}

impl PochSpec {
    pub fn infinite(scalar: i64, z_exp: i64, q_start: usize, q_step: usize) -> Self {
        PochSpec {
            scalar,
            z_exp,
            q_start,
            q_step,
            count: PochCount::Infinite,
        }
    }

    pub fn finite(scalar: i64, z_exp: i64, q_start: usize, q_step: usize, n: usize) -> Self {
        PochSpec {
            scalar,
            z_exp,
            q_start,
            q_step,
            count: PochCount::Finite(n),
        }
    }
}

/// Expands the product described by `spec`, truncated at `order`.
///
/// Factors whose `q`-power exceeds the truncation order are invisible and
/// skipped, which is what makes infinite products finite work.
pub fn poch_product(spec: &PochSpec, order: usize) -> QSeries {
    assert!(
        spec.q_start >= 1 && spec.q_step >= 1,
        "pochhammer factors must start at q^1 or higher and step by at least 1"
    );
    let mut s = QSeries::one(order);
    let mut k = 0usize;
    loop {
        if let PochCount::Finite(n) = spec.count {
            if k == n {
                break;
            }
        }
        let q_exp = spec.q_start + k * spec.q_step;
        if q_exp > order {
            break;
        }
        s.mul_factor(spec.scalar, spec.z_exp, q_exp);
        k += 1;
    }
    s
}
