//! The two telescoping expansions of the Euler product.
//!
//! Writing `s = (1 - x)(1 - x^2)(1 - x^3)...` as
//! `1 - x - x^2(1 - x) - x^3(1 - x)(1 - x^2) - ...`, each expansion names the
//! unexpanded tail a *letter* (`A`, `B`, `C`, ... = stage 1, 2, 3, ...),
//! expands one binomial factor common to all its summands, regroups equal
//! powers, and splits off two explicit monomials. What remains is the next
//! letter. The explicit monomials, in order, are the expanded series.
//!
//! **Method 1.** Letter `m` is
//!
//! ```text
//! L_m = sum_{j>=1} x^(h_m + m(j-1)) (1 - x^m)(1 - x^(m+1))...(1 - x^(m+j-1))
//! ```
//!
//! with heads `h_1 = 2` and `h_(m+1) = h_m + 3m + 2`, and it satisfies
//! `L_m = x^(e1) - x^(e2) - L_(m+1)` where `e1 = h_m`, `e2 = e1 + 2m + 1`.
//! The series is `1 - x - L_1`.
//!
//! **Method 2.** Letter `m` is
//!
//! ```text
//! M_m = x^(t_m) - sum_{j>=2} x^(t_m + m(j-2)) (1 - x^m)...(1 - x^(m+j-1))
//! ```
//!
//! with anchors `t_m = 3m(m+1)/2` kept by `t_(m+1) = t_m + 3(m+1)`. Group `n`
//! of the stream emits `t_n - 2n` and `t_n - n` with sign `(-1)^n`; letter `m`
//! satisfies `M_m = x^a + x^b - M_(m+1)` where `(a, b)` is group `m + 1`.
//! The series is `1 - x - x^2 + M_1`.
//!
//! Streams are driven only by these additive recurrences. Nothing here calls
//! into [`crate::pentagonal`], so agreement with the closed form is a real
//! cross-check.
//!
//! The classical exposition of method 1 also writes each head as a chain
//! such as `7 = 3 + 4 = 3 + 1 + 3 = 3 + 1 + 1 + 2`. That chain has no clear
//! derivation from the regrouping steps and is not reproduced here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{mul_binomial_in_place, Sign, TruncatedSeries};

/// One emitted monomial `sign * x^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub sign: Sign,
    #[serde(rename = "exp")]
    pub exponent: u64,
}

impl Term {
    pub fn new(sign: Sign, exponent: u64) -> Term {
        Term { sign, exponent }
    }
}

/// Rendered as `"sign exponent"`, e.g. `- 12`.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.sign.symbol(), self.exponent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Method1,
    Method2,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Method1 => "method1",
            Method::Method2 => "method2",
        })
    }
}

/// Stage `m` of a telescoping expansion.
///
/// `head` is the method-1 head `h_m` (2, 7, 15, 26, ...) or the method-2
/// anchor `t_m` (3, 9, 18, 30, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StageState {
    pub method: Method,
    pub m: u64,
    pub head: u64,
}

impl StageState {
    pub fn first(method: Method) -> StageState {
        let head = match method {
            Method::Method1 => 2,
            Method::Method2 => 3,
        };
        StageState { method, m: 1, head }
    }

    /// Stage `m` reached by stepping the recurrence from stage 1.
    pub fn at(method: Method, m: u64) -> Result<StageState> {
        if m == 0 {
            return Err(Error::ZeroStage);
        }
        let mut state = StageState::first(method);
        while state.m < m {
            state = state.next().ok_or(Error::ExponentOverflow)?;
        }
        Ok(state)
    }

    pub fn next(&self) -> Option<StageState> {
        let m = self.m;
        let step = match self.method {
            Method::Method1 => m.checked_mul(3)?.checked_add(2)?,
            Method::Method2 => m.checked_add(1)?.checked_mul(3)?,
        };
        Some(StageState {
            method: self.method,
            m: m + 1,
            head: self.head.checked_add(step)?,
        })
    }

    /// The two monomials this stage contributes to the stream.
    pub fn emissions(&self) -> Option<[Term; 2]> {
        let m = self.m;
        match self.method {
            Method::Method1 => {
                let e1 = self.head;
                let e2 = e1.checked_add(m.checked_mul(2)?.checked_add(1)?)?;
                let sign = Sign::parity(m);
                Some([Term::new(sign, e1), Term::new(-sign, e2)])
            }
            Method::Method2 => {
                let sign = Sign::parity(m);
                Some([
                    Term::new(sign, self.head - 2 * m),
                    Term::new(sign, self.head - m),
                ])
            }
        }
    }
}

/// Terms of method 1: `1, -x`, then two per stage.
#[derive(Debug, Clone)]
pub struct Method1Stream {
    prelude: std::slice::Iter<'static, Term>,
    stage: Option<StageState>,
    pending: Option<Term>,
}

const METHOD1_PRELUDE: [Term; 2] = [
    Term { sign: Sign::Plus, exponent: 0 },
    Term { sign: Sign::Minus, exponent: 1 },
];
const METHOD2_PRELUDE: [Term; 1] = [Term { sign: Sign::Plus, exponent: 0 }];

impl Method1Stream {
    pub fn new() -> Self {
        Method1Stream {
            prelude: METHOD1_PRELUDE.iter(),
            stage: Some(StageState::first(Method::Method1)),
            pending: None,
        }
    }

    /// The stage whose terms come next.
    pub fn stage(&self) -> Option<StageState> {
        self.stage
    }
}

impl Default for Method1Stream {
    fn default() -> Self {
        Self::new()
    }
}

/// Terms of method 2: `1`, then two per group `n = 1, 2, ...`.
#[derive(Debug, Clone)]
pub struct Method2Stream {
    prelude: std::slice::Iter<'static, Term>,
    stage: Option<StageState>,
    pending: Option<Term>,
}

impl Method2Stream {
    pub fn new() -> Self {
        Method2Stream {
            prelude: METHOD2_PRELUDE.iter(),
            stage: Some(StageState::first(Method::Method2)),
            pending: None,
        }
    }

    pub fn stage(&self) -> Option<StageState> {
        self.stage
    }
}

impl Default for Method2Stream {
    fn default() -> Self {
        Self::new()
    }
}

fn next_term(
    prelude: &mut std::slice::Iter<'static, Term>,
    stage: &mut Option<StageState>,
    pending: &mut Option<Term>,
) -> Option<Term> {
    if let Some(t) = prelude.next() {
        return Some(*t);
    }
    if let Some(t) = pending.take() {
        return Some(t);
    }
    let current = (*stage)?;
    let Some([first, second]) = current.emissions() else {
        *stage = None;
        return None;
    };
    *pending = Some(second);
    *stage = current.next();
    Some(first)
}

impl Iterator for Method1Stream {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        next_term(&mut self.prelude, &mut self.stage, &mut self.pending)
    }
}

impl Iterator for Method2Stream {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        next_term(&mut self.prelude, &mut self.stage, &mut self.pending)
    }
}

pub fn method1_stream(count: usize) -> Vec<Term> {
    Method1Stream::new().take(count).collect()
}

pub fn method2_stream(count: usize) -> Vec<Term> {
    Method2Stream::new().take(count).collect()
}

/// Sums the terms with exponent at most `order` into a series.
pub fn series_from_terms<I>(terms: I, order: usize) -> TruncatedSeries
where
    I: IntoIterator<Item = Term>,
{
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for t in terms {
        if let Some(c) = usize::try_from(t.exponent).ok().and_then(|e| coeffs.get_mut(e)) {
            *c += t.sign.to_coefficient();
        }
    }
    TruncatedSeries::from_vec_unchecked(coeffs)
}

/// Letter `m` of the chosen method, evaluated from its defining sum
/// modulo `x^(order+1)`.
pub fn residual_series(method: Method, m: usize, order: usize) -> Result<TruncatedSeries> {
    let state = StageState::at(method, m as u64)?;
    let mut out = vec![BigInt::zero(); order + 1];
    let head = usize::try_from(state.head).unwrap_or(usize::MAX);

    // `product` holds the running factor product, truncated to what still
    // fits below the order after shifting by the current summand's exponent.
    let mut product = vec![BigInt::zero(); (order + 1).saturating_sub(head)];
    if let Some(c) = product.first_mut() {
        *c = BigInt::from(1);
    }
    let mut shift = head;
    match method {
        Method::Method1 => {
            let mut factor = m;
            while shift <= order {
                product.truncate(order + 1 - shift);
                mul_binomial_in_place(&mut product, factor);
                for (o, p) in out[shift..].iter_mut().zip(&product) {
                    *o += p;
                }
                factor += 1;
                shift += m;
            }
        }
        Method::Method2 => {
            if head <= order {
                out[head] += 1;
                mul_binomial_in_place(&mut product, m);
            }
            let mut factor = m + 1;
            while shift <= order {
                product.truncate(order + 1 - shift);
                mul_binomial_in_place(&mut product, factor);
                for (o, p) in out[shift..].iter_mut().zip(&product) {
                    *o -= p;
                }
                factor += 1;
                shift += m;
            }
        }
    }
    Ok(TruncatedSeries::from_vec_unchecked(out))
}

/// The monomials split off between letter `m` and letter `m + 1`.
fn stage_pair(method: Method, m: usize) -> Result<[Term; 2]> {
    let state = match method {
        Method::Method1 => StageState::at(method, m as u64)?,
        Method::Method2 => StageState::at(method, m as u64 + 1)?,
    };
    state.emissions().ok_or(Error::ExponentOverflow)
}

/// Smallest order at which [`verify_stage`] accepts stage `m`.
pub fn stage_requirement(method: Method, m: usize) -> Result<u64> {
    Ok(stage_pair(method, m)?[1].exponent)
}

/// Checks one stage identity exactly at the given order:
/// `L_m = x^e1 - x^e2 - L_(m+1)` for method 1 and
/// `M_m = x^a + x^b - M_(m+1)` for method 2.
pub fn verify_stage(method: Method, m: usize, order: usize) -> Result<bool> {
    let [first, second] = stage_pair(method, m)?;
    if second.exponent > order as u64 {
        return Err(Error::OrderBelowStage {
            stage: m,
            needed: second.exponent,
            order,
        });
    }
    let letter = residual_series(method, m, order)?;
    let next = residual_series(method, m + 1, order)?;

    let mut rhs = next.negate().into_coeffs();
    // Letter m enters the full series with sign (-1)^m (method 1) or
    // (-1)^(m+1) (method 2); dividing that out of the stream signs gives
    // the identity's own signs, (+, -) and (+, +) respectively.
    let orient = match method {
        Method::Method1 => Sign::parity(m as u64),
        Method::Method2 => Sign::parity(m as u64 + 1),
    };
    for t in [first, second] {
        let sign = if orient == Sign::Plus { t.sign } else { -t.sign };
        rhs[t.exponent as usize] += sign.to_coefficient();
    }
    Ok(letter == TruncatedSeries::from_vec_unchecked(rhs))
}
