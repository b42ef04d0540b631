//! The inverse of the Euler product: partition numbers and iterated division.
//!
//! Dividing the product by `1 - x`, then by `1 - x^2`, and so on leaves the
//! quotient `1` in the limit, so the product's inverse is
//! `prod 1/(1 - x^k) = sum p(n) x^n` with `p(n)` the number of partitions
//! of `n`. Reading off the coefficient of `x^n` in
//! `(sum_k (-1)^|k| x^(k(3k-1)/2)) * (sum p(n) x^n) = 1` gives, for `n >= 1`,
//!
//! ```text
//! p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
//! ```
//!
//! with terms of negative argument dropped. [`PartitionTable`] evaluates
//! this recurrence; [`partition_series`] inverts the closed-form series
//! directly; [`partition_bruteforce`] counts by a dynamic program over the
//! largest part and shares no code with either.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::pentagonal::{closed_form_series, gpent};
use crate::series::{Coefficient, TruncatedSeries};

/// Largest `n` accepted by [`partition_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 100;

/// Memoized `p(0), p(1), ...`, grown on demand.
///
/// Extension needs `&mut self`; share a table across threads only after it
/// has been grown far enough.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    values: Vec<Coefficient>,
}

impl Default for PartitionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionTable {
    pub fn new() -> Self {
        PartitionTable {
            values: vec![BigInt::one()],
        }
    }

    pub fn computed_upto(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Coefficient] {
        &self.values
    }

    /// `p(n)`, extending the table if needed.
    pub fn get(&mut self, n: usize) -> &Coefficient {
        self.extend_to(n);
        &self.values[n]
    }

    pub fn extend_to(&mut self, upto: usize) {
        self.values.reserve((upto + 1).saturating_sub(self.values.len()));
        for n in self.values.len()..=upto {
            let p = self.next_value(n as u64);
            self.values.push(p);
        }
    }

    fn next_value(&self, n: u64) -> Coefficient {
        let mut acc = BigInt::default();
        for k in 1i64.. {
            let plus = k % 2 == 1;
            let first = gpent(k).expect("k below sqrt(n)");
            if first > n {
                break;
            }
            let mut add = |e: u64| {
                let v = &self.values[(n - e) as usize];
                if plus {
                    acc += v;
                } else {
                    acc -= v;
                }
            };
            add(first);
            let second = gpent(-k).expect("k below sqrt(n)");
            if second <= n {
                add(second);
            }
        }
        acc
    }
}

/// `p(n)` via the pentagonal recurrence, memoized in `table`.
pub fn partition_count(n: usize, table: &mut PartitionTable) -> Coefficient {
    table.get(n).clone()
}

/// `p(n)` by counting partitions by their largest part.
///
/// Independent test oracle; refuses `n > 100`.
pub fn partition_bruteforce(n: usize) -> Result<Coefficient> {
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::OracleBoundExceeded(n));
    }
    // ways[t] = number of partitions of t into parts <= largest, after
    // admitting parts 1..=largest one at a time.
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for largest in 1..=n {
        for total in largest..=n {
            ways[total] += ways[total - largest];
        }
    }
    Ok(BigInt::from(ways[n]))
}

/// `sum_{n<=order} p(n) x^n`, as the inverse of the closed-form series.
pub fn partition_series(order: usize) -> TruncatedSeries {
    closed_form_series(order)
        .inverse()
        .expect("closed form has constant term 1")
}

/// Divides the closed-form series of order `order` by `1 - x^k` for
/// `k = 1..=depth` and checks that the quotient is `1 mod x^(depth+1)`.
pub fn iterated_division_check(depth: usize, order: usize) -> Result<bool> {
    if order < depth {
        return Err(Error::InsufficientOrder { order, depth });
    }
    let mut quotient = closed_form_series(order);
    for k in 1..=depth {
        quotient = quotient.div_binomial(k)?;
    }
    Ok(quotient.truncate(depth).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::partial_product;

    /// Explicit listing of nonincreasing summand sequences.
    fn enumerate(n: usize, max_part: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for first in (1..=max_part.min(n)).rev() {
            for mut rest in enumerate(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn explicit_listing() {
        assert_eq!(
            enumerate(4, 4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        let counts: Vec<usize> = (0..=10).map(|n| enumerate(n, n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn bruteforce_matches_listing() {
        for n in 0..=25 {
            assert_eq!(partition_bruteforce(n).unwrap(), BigInt::from(enumerate(n, n).len()));
        }
        assert_eq!(partition_bruteforce(100).unwrap(), BigInt::from(190_569_292u64));
        assert_eq!(partition_bruteforce(101), Err(Error::OracleBoundExceeded(101)));
    }

    #[test]
    fn count_examples() {
        let mut table = PartitionTable::new();
        assert_eq!(partition_count(0, &mut table), BigInt::from(1));
        assert_eq!(partition_count(5, &mut table), BigInt::from(7));
        assert_eq!(partition_count(10, &mut table), BigInt::from(42));
        assert_eq!(table.computed_upto(), 10);
        // Shrinking requests never shrink the table.
        partition_count(3, &mut table);
        assert_eq!(table.computed_upto(), 10);
    }

    #[test]
    fn recurrence_matches_oracle() {
        let mut table = PartitionTable::new();
        for n in 0..=BRUTEFORCE_LIMIT {
            assert_eq!(partition_count(n, &mut table), partition_bruteforce(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn exceeds_u64() {
        let mut table = PartitionTable::new();
        assert!(table.get(400).bits() < 64);
        assert!(table.get(420).bits() > 64);
        assert!(table.values().windows(2).skip(1).all(|w| w[0] < w[1]));
    }

    #[test]
    fn series_examples() {
        assert_eq!(partition_series(0), TruncatedSeries::one(0));
        assert_eq!(partition_series(5), TruncatedSeries::from_i64s(&[1, 1, 2, 3, 5, 7]).unwrap());
        let n = 300;
        assert!(partition_series(n).mul(&closed_form_series(n)).is_one());
        assert!(partition_series(n).mul(&partial_product(n, n)).is_one());
    }

    #[test]
    fn division_examples() {
        assert_eq!(iterated_division_check(1, 10), Ok(true));
        assert_eq!(iterated_division_check(5, 40), Ok(true));
        assert_eq!(iterated_division_check(0, 5), Ok(true));
        assert_eq!(iterated_division_check(6, 5), Err(Error::InsufficientOrder { order: 5, depth: 6 }));
        // The quotient after one step starts 1 - x^2.
        let q = closed_form_series(10).div_binomial(1).unwrap();
        assert_eq!(q, partial_product(10, 10).div_binomial(1).unwrap());
        assert_eq!(q.truncate(3), TruncatedSeries::from_i64s(&[1, 0, -1, -1]).unwrap());
    }

    #[test]
    fn division_detects_wrong_series() {
        let mut c = closed_form_series(20).into_coeffs();
        c[3] += 1;
        let mut q = TruncatedSeries::from_coeffs(c).unwrap();
        for k in 1..=5 {
            q = q.div_binomial(k).unwrap();
        }
        assert!(!q.truncate(5).is_one());
    }
}
