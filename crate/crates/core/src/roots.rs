//! Roots of the finite partial products `prod_{k=1..M} (1 - x^k)`.
//!
//! Each factor `1 - x^k` vanishes exactly at the `k`-th roots of unity, so
//! the primitive `d`-th roots appear once for every `k <= M` divisible by
//! `d`: multiplicity `floor(M/d)`. That is checked here by exact division by
//! the cyclotomic polynomial `Phi_d`, never numerically. Only finite
//! products are examined; the truncated closed-form series itself has other
//! roots and is not studied.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{convolve, Coefficient};

/// Largest index accepted by [`cyclotomic`].
pub const MAX_CYCLOTOMIC_INDEX: usize = 10_000;

/// Integer polynomial with its true degree.
///
/// Coefficients are stored without trailing zeros; the zero polynomial has
/// no coefficients and reports degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Coefficient>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Coefficient>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] += 1;
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Coefficient> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        Self::new(convolve(&self.coeffs, &other.coeffs, len))
    }

    /// `prod_{k=1..factors} (1 - x^k)` without truncation.
    pub fn euler_partial_product(factors: usize) -> IntPolynomial {
        let degree = factors * (factors + 1) / 2;
        let mut c = vec![BigInt::zero(); degree + 1];
        c[0] = BigInt::one();
        let mut top = 0;
        for k in 1..=factors {
            top += k;
            for i in (k..=top).rev() {
                let (lo, hi) = c.split_at_mut(i);
                hi[0] -= &lo[i - k];
            }
        }
        Self::new(c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let magnitude = c.abs();
            if !magnitude.is_one() || k == 0 {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Division with remainder by a monic divisor: `a = b*q + r`, `deg r < deg b`.
pub fn poly_divrem(a: &IntPolynomial, b: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    if b.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if !b.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    let db = b.degree();
    if a.is_zero() || a.degree() < db {
        return Ok((IntPolynomial::zero(), a.clone()));
    }
    let mut rem = a.coeffs.clone();
    let mut quot = vec![BigInt::zero(); a.degree() - db + 1];
    for shift in (0..quot.len()).rev() {
        let lead = std::mem::take(&mut rem[shift + db]);
        if lead.is_zero() {
            continue;
        }
        for (i, bc) in b.coeffs[..db].iter().enumerate() {
            rem[shift + i] -= &lead * bc;
        }
        quot[shift] = lead;
    }
    rem.truncate(db);
    Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
}

/// Memo table of cyclotomic polynomials.
#[derive(Debug, Clone, Default)]
pub struct CyclotomicCache {
    table: HashMap<usize, IntPolynomial>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e`, each division exact.
    pub fn get(&mut self, d: usize) -> Result<&IntPolynomial> {
        if d == 0 || d > MAX_CYCLOTOMIC_INDEX {
            return Err(Error::CyclotomicIndex(d));
        }
        if !self.table.contains_key(&d) {
            let mut phi = IntPolynomial::x_pow_minus_one(d);
            for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
                let divisor = self.get(e)?.clone();
                let (q, r) = poly_divrem(&phi, &divisor)?;
                if !r.is_zero() {
                    return Err(Error::InternalDivisionFailure);
                }
                phi = q;
            }
            self.table.insert(d, phi);
        }
        Ok(&self.table[&d])
    }
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: usize) -> Result<IntPolynomial> {
    CyclotomicCache::new().get(d).cloned()
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Number of times `Phi_d` divides `prod_{k=1..factors} (1 - x^k)` exactly.
pub fn root_multiplicity(factors: usize, d: usize) -> Result<usize> {
    let mut cache = CyclotomicCache::new();
    root_multiplicity_with(&mut cache, factors, d)
}

pub fn root_multiplicity_with(cache: &mut CyclotomicCache, factors: usize, d: usize) -> Result<usize> {
    let phi = cache.get(d)?;
    let mut current = IntPolynomial::euler_partial_product(factors);
    let mut count = 0;
    loop {
        let (q, r) = poly_divrem(&current, phi)?;
        if !r.is_zero() {
            return Ok(count);
        }
        count += 1;
        current = q;
    }
}
