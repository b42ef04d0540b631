//! Generalized pentagonal numbers and the closed-form series.
//!
//! Every exponent of the expanded product is `k(3k - 1)/2` for some nonzero
//! integer `k`, and its coefficient is `(-1)^|k|`. Positive `k` gives the
//! pentagonal numbers `1, 5, 12, 22, ...`; negative `k` gives
//! `2, 7, 15, 26, ...`. Enumerating `k = 1, -1, 2, -2, ...` lists the
//! exponents in strictly ascending order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Sign, TruncatedSeries};

/// `k(3k - 1)/2`, with overflow reported rather than wrapped.
pub fn gpent(k: i64) -> Result<u64> {
    let k = i128::from(k);
    let value = k
        .checked_mul(3 * k - 1)
        .map(|v| v / 2)
        .ok_or(Error::ExponentOverflow)?;
    u64::try_from(value).map_err(|_| Error::ExponentOverflow)
}

/// One monomial `sign * x^exponent` of the closed form, tagged by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PentTerm {
    pub k: i64,
    pub exponent: u64,
    pub sign: Sign,
}

impl PentTerm {
    pub fn new(k: i64) -> Result<PentTerm> {
        Ok(PentTerm {
            k,
            exponent: gpent(k)?,
            sign: Sign::parity(k.unsigned_abs()),
        })
    }
}

impl fmt::Display for PentTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} exp={} sign={}", self.k, self.exponent, self.sign.symbol())
    }
}

/// Index order `1, -1, 2, -2, 3, -3, ...`.
fn pent_indices() -> impl Iterator<Item = i64> {
    (1..).flat_map(|n: i64| [n, -n])
}

/// All terms with exponent at most `order`, ascending by exponent.
pub fn pent_terms_upto(order: u64) -> Vec<PentTerm> {
    pent_indices()
        .map(|k| PentTerm::new(k).expect("index stays far below the overflow bound"))
        .take_while(|t| t.exponent <= order)
        .collect()
}

/// `1 + sum_k (-1)^|k| x^(k(3k-1)/2)` truncated at `order`.
pub fn closed_form_series(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::from(1);
    for term in pent_terms_upto(order as u64) {
        coeffs[term.exponent as usize] = term.sign.to_coefficient();
    }
    TruncatedSeries::from_vec_unchecked(coeffs)
}
