//! Truncated trivariate formal power series in x (vertices), y
//! (bad-component count) and z (bad vertices), with exact signed
//! coefficients. Just enough arithmetic to expand the rational
//! generating functions for the path and cycle coefficient tables.
//!
//! Truncation is by x-degree alone: every monomial of the generators has
//! y- and z-degree bounded by its x-degree, so nothing is lost.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse trivariate polynomial representative of a power series,
/// keyed by exponents (n, m, j) of (x, y, z). Zero coefficients are
/// never stored; stored keys satisfy n <= order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: BTreeMap<(usize, usize, usize), BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, 0, 1)
    }

    /// c * x^n y^m z^j, truncated away entirely if n > order.
    pub fn monomial(order: usize, n: usize, m: usize, j: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if n <= order && c != 0 {
            s.coeffs.insert((n, m, j), BigInt::from(c));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Stored coefficient or 0. Errors when n exceeds the truncation
    /// order (the value is simply unknown there).
    pub fn coefficient(&self, n: usize, m: usize, j: usize) -> Result<BigInt> {
        if n > self.order {
            return Err(Error::BeyondTruncation {
                n,
                order: self.order,
            });
        }
        Ok(self.coeffs.get(&(n, m, j)).cloned().unwrap_or_default())
    }

    /// Non-zero terms in lexicographic (n, m, j) order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &BigInt)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (&key, value) in &other.coeffs {
            let entry = out.coeffs.entry(key).or_default();
            *entry += value;
            if entry.is_zero() {
                out.coeffs.remove(&key);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }

    /// Cauchy product, discarding x-degree > order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let mut out = TruncatedSeries::zero(self.order);
        for (&(n1, m1, j1), c1) in &self.coeffs {
            for (&(n2, m2, j2), c2) in &other.coeffs {
                let n = n1 + n2;
                if n > self.order {
                    continue;
                }
                let key = (n, m1 + m2, j1 + j2);
                let entry = out.coeffs.entry(key).or_default();
                *entry += c1 * c2;
                if entry.is_zero() {
                    out.coeffs.remove(&key);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series with constant term 1, via the
    /// geometric sum of powers of u where self = 1 - u. Requires every
    /// term of u to carry positive x-degree, so powers past the order
    /// vanish.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let one = BigInt::one();
        if self.coeffs.get(&(0, 0, 0)) != Some(&one) {
            return Err(Error::NonUnitConstant);
        }
        // self = 1 - u
        let u = TruncatedSeries::one(self.order).sub(self)?;
        if u.coeffs.keys().any(|&(n, _, _)| n == 0) {
            return Err(Error::NonUnitConstant);
        }
        let mut acc = TruncatedSeries::one(self.order);
        let mut power = TruncatedSeries::one(self.order);
        for _ in 1..=self.order {
            power = power.mul(&u)?;
            if power.coeffs.is_empty() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// CSV rows `n,m,j,coefficient` for all non-zero terms, in
    /// lexicographic (n, m, j) order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for ((n, m, j), c) in self.terms() {
            out.push_str(&format!("{n},{m},{j},{c}\n"));
        }
        out
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }
}

/// Denominator shared by both generating functions:
/// 1 - x + x^2 y z^2 + x^3 y z^3.
pub fn path_series_denominator(order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .sub(&TruncatedSeries::monomial(order, 1, 0, 0, 1))
        .unwrap()
        .add(&TruncatedSeries::monomial(order, 2, 1, 2, 1))
        .unwrap()
        .add(&TruncatedSeries::monomial(order, 3, 1, 3, 1))
        .unwrap()
}

/// Generating function for the path tables:
/// coefficient at (n, m, j) is (-1)^m p(j, m, n).
pub fn path_series(order: usize) -> TruncatedSeries {
    path_series_denominator(order).reciprocal().unwrap()
}

/// Generating function for the cycle tables:
/// 1 + x^2 y z^2 + 2 x^3 y z^3 - x^4 y z^4
///   + (x - 2 x^2 y z^2 - 3 x^3 y z^3) / (1 - x + x^2 y z^2 + x^3 y z^3).
///
/// Coefficient at (n, m, j) is (-1)^m c(j, m, n) for n >= 5.
pub fn cycle_series(order: usize) -> TruncatedSeries {
    let numerator = TruncatedSeries::monomial(order, 1, 0, 0, 1)
        .add(&TruncatedSeries::monomial(order, 2, 1, 2, -2))
        .unwrap()
        .add(&TruncatedSeries::monomial(order, 3, 1, 3, -3))
        .unwrap();
    let corrections = TruncatedSeries::one(order)
        .add(&TruncatedSeries::monomial(order, 2, 1, 2, 1))
        .unwrap()
        .add(&TruncatedSeries::monomial(order, 3, 1, 3, 2))
        .unwrap()
        .add(&TruncatedSeries::monomial(order, 4, 1, 4, -1))
        .unwrap();
    corrections
        .add(&numerator.mul(&path_series(order)).unwrap())
        .unwrap()
}
