//! Power series over the integers, truncated at a fixed order.
//!
//! A [`TruncatedSeries`] of order `N` holds the coefficients of
//! `x^0 ..= x^N` and stands for the power series modulo `x^(N+1)`.
//! Binary operations return the smaller of the two operand orders;
//! nothing is ever zero-padded up to a larger order.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient of a series or polynomial.
pub type Coefficient = BigInt;

/// A unit sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn parity(n: u64) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn to_coefficient(self) -> Coefficient {
        BigInt::from(self.as_i8())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match i8::deserialize(deserializer)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

/// Dense integer power series modulo `x^(order+1)`.
///
/// Two series are equal only if they have the same order and the same
/// coefficients. Use [`TruncatedSeries::agrees_upto`] for prefix comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<Coefficient>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `x^exponent` at the given order; the zero series if `exponent > order`.
    pub fn monomial(exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// Coefficient of `x^k`, or `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Coefficient> {
        self.coeffs.get(k)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True iff both series are defined and equal on `x^0 ..= x^k`.
    pub fn agrees_upto(&self, other: &TruncatedSeries, k: usize) -> bool {
        k <= self.order() && k <= other.order() && self.coeffs[..=k] == other.coeffs[..=k]
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Largest coefficient bit length (0 for the zero series).
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Coefficient)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn negate(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated convolution at the smaller operand order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: convolve(&self.coeffs, &other.coeffs, order + 1),
        }
    }

    /// `self * (1 - x^k)` at the same order, in O(N).
    pub fn mul_binomial(&self, k: usize) -> Result<TruncatedSeries> {
        if k == 0 {
            return Err(Error::ZeroFactorExponent);
        }
        let mut coeffs = self.coeffs.clone();
        mul_binomial_in_place(&mut coeffs, k);
        Ok(TruncatedSeries { coeffs })
    }

    /// The quotient `q` with `q * (1 - x^k) = self` at the same order, in O(N).
    pub fn div_binomial(&self, k: usize) -> Result<TruncatedSeries> {
        if k == 0 {
            return Err(Error::ZeroFactorExponent);
        }
        let mut coeffs = self.coeffs.clone();
        div_binomial_in_place(&mut coeffs, k);
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; requires a constant term of `+1` or `-1`.
    ///
    /// Uses `b_0 = a_0` and `b_n = -a_0 * sum_{j=1..n} a_j b_{n-j}`, a dense
    /// O(N^2) recurrence.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let a = &self.coeffs;
        let a0 = &a[0];
        if !a0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let negate = a0.is_positive();
        let mut b: Vec<Coefficient> = Vec::with_capacity(a.len());
        b.push(a0.clone());
        for n in 1..a.len() {
            let mut acc = BigInt::zero();
            for j in 1..=n {
                acc += &a[j] * &b[n - j];
            }
            b.push(if negate { -acc } else { acc });
        }
        Ok(TruncatedSeries { coeffs: b })
    }
}

/// `out_k = sum_{i+j=k} a_i b_j` for `k < len`.
pub(crate) fn convolve(a: &[Coefficient], b: &[Coefficient], len: usize) -> Vec<Coefficient> {
    let mut out = vec![BigInt::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Replaces `c` by `c * (1 - x^k)` truncated to `c.len()` terms.
pub(crate) fn mul_binomial_in_place(c: &mut [Coefficient], k: usize) {
    // Descending so that c[i - k] still holds the input value.
    for i in (k..c.len()).rev() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] -= &lo[i - k];
    }
}

/// Replaces `c` by `c / (1 - x^k)` truncated to `c.len()` terms.
pub(crate) fn div_binomial_in_place(c: &mut [Coefficient], k: usize) {
    for i in k..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] += &lo[i - k];
    }
}

/// `prod_{k=1..factors} (1 - x^k)` modulo `x^(order+1)`.
///
/// Factors with `k > order` are the identity at this order and are skipped.
pub fn partial_product(factors: usize, order: usize) -> TruncatedSeries {
    let mut coeffs = TruncatedSeries::one(order).coeffs;
    for k in 1..=factors.min(order) {
        mul_binomial_in_place(&mut coeffs, k);
    }
    TruncatedSeries { coeffs }
}

/// Writes the series the way it would be written by hand:
/// `1 - x - x^2 + x^5`, zero terms omitted, `0` for the zero series.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.support() {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_magnitude = !magnitude.is_one() || k == 0;
            if show_magnitude {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

/// Serialized as `{"order": N, "coeffs": ["1", "-1", ...]}` with decimal
/// strings, since coefficients outgrow every native JSON number type.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(de::Error::custom(format!(
                "order {} requires {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c).unwrap()
    }

    /// Schoolbook product of full polynomials, no truncation.
    fn naive_poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn from_coeffs() {
        assert_eq!(s(&[1]).order(), 0);
        assert_eq!(s(&[1, -1]).to_string(), "1 - x");
        assert_eq!(s(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(TruncatedSeries::from_coeffs(vec![]), Err(Error::EmptySeries));
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(&[1, -1]).add(&s(&[0, 1])), s(&[1, 0]));
        let a = s(&[1, -1, 0, 0, 0, 0]);
        let b = s(&[0, 0, 1, 0]);
        let sum = a.add(&b);
        assert_eq!(sum.order(), 3);
        assert_eq!(sum, s(&[1, -1, 1, 0]));
        // x^2 - x^5 plus -x^7 at order 8.
        let head = s(&[0, 0, 1, 0, 0, -1, 0, 0, 0]);
        let tail = TruncatedSeries::monomial(7, 8).negate();
        assert_eq!(head.add(&tail), s(&[0, 0, 1, 0, 0, -1, 0, -1, 0]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, -1, 0]).mul(&s(&[1, 1, 0])), s(&[1, 0, -1]));
        // (1 - x) * (1 + x + ... + x^n) is exactly 1 at order n.
        for n in 1..12 {
            let mut factor = vec![0; n + 1];
            factor[0] = 1;
            factor[1] = -1;
            let prod = s(&factor).mul(&s(&vec![1; n + 1]));
            assert_eq!(prod, TruncatedSeries::one(n), "n = {n}");
        }
        let full = naive_poly_mul(&naive_poly_mul(&[1, -1], &[1, 0, -1]), &[1, 0, 0, -1]);
        let mut expected = full.clone();
        expected.resize(11, 0);
        assert_eq!(&expected[..7], &[1, -1, -1, 0, 1, 1, -1]);
        let pad = |c: &[i64]| {
            let mut v = c.to_vec();
            v.resize(11, 0);
            s(&v)
        };
        let got = pad(&[1, -1]).mul(&pad(&[1, 0, -1])).mul(&pad(&[1, 0, 0, -1]));
        assert_eq!(got, s(&expected));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(s(&[1, 0, 0, 0, 0]).mul_binomial(3).unwrap(), s(&[1, 0, 0, -1, 0]));
        assert_eq!(s(&[1; 9]).mul_binomial(1).unwrap(), TruncatedSeries::one(8));
        assert_eq!(s(&[1, -1, 0, 0, 0]).mul_binomial(2).unwrap(), s(&[1, -1, -1, 1, 0]));
        assert_eq!(s(&[1]).mul_binomial(0), Err(Error::ZeroFactorExponent));

        assert_eq!(s(&[1, 0, -1, 0, 0]).div_binomial(1).unwrap(), s(&[1, 1, 0, 0, 0]));
        assert_eq!(TruncatedSeries::one(6).div_binomial(1).unwrap(), s(&[1; 7]));
        assert_eq!(s(&[1]).div_binomial(0), Err(Error::ZeroFactorExponent));
        // k beyond the order leaves the series untouched.
        assert_eq!(s(&[3, 2]).mul_binomial(5).unwrap(), s(&[3, 2]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(&[1, -1, 0, 0]).inverse().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(TruncatedSeries::one(7).inverse().unwrap(), TruncatedSeries::one(7));
        assert_eq!(s(&[-1, 1]).inverse().unwrap(), s(&[-1, -1]));
        assert_eq!(s(&[2, 1]).inverse(), Err(Error::NonUnitConstantTerm));
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn partial_product_examples() {
        assert_eq!(partial_product(0, 5), TruncatedSeries::one(5));
        assert_eq!(partial_product(3, 10), s(&[1, -1, -1, 0, 1, 1, -1, 0, 0, 0, 0]));
        assert_eq!(
            partial_product(12, 12),
            s(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
        // Brute-force convolution of the first three factors as full polynomials.
        let full = naive_poly_mul(&naive_poly_mul(&[1, -1], &[1, 0, -1]), &[1, 0, 0, -1]);
        let mut t = full.clone();
        t.resize(11, 0);
        assert_eq!(partial_product(3, 10), s(&t));
    }

    #[test]
    fn partial_product_coefficients_are_small() {
        let p = partial_product(2000, 2000);
        assert!(p.coeffs().iter().all(|c| c.abs() <= BigInt::one()));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[0, 0, 0]).to_string(), "0");
        assert_eq!(s(&[-2, 3, 0, -1]).to_string(), "-2 + 3x - x^3");
        assert_eq!(s(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&s(&[1, -1, 0])).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","-1","0"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s(&[1, -1, 0]));
        let bad = serde_json::from_str::<TruncatedSeries>(r#"{"order":3,"coeffs":["1"]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn agrees_upto_is_prefix_only() {
        let a = s(&[1, 2, 3]);
        let b = s(&[1, 2, 4, 5]);
        assert!(a.agrees_upto(&b, 1));
        assert!(!a.agrees_upto(&b, 2));
        assert!(!a.agrees_upto(&b, 3));
        assert_ne!(a.truncate(1), b);
        assert_eq!(a.truncate(1), b.truncate(1));
    }
}
