//! Exact expansion of the Euler product `(1 - x)(1 - x^2)(1 - x^3)...`.
//!
//! The product is expanded four independent ways and the results are
//! compared coefficient by coefficient:
//!
//! * direct multiplication of truncated binomial factors ([`partial_product`]),
//! * two telescoping expansions that peel off residual letters `A, B, C, ...`
//!   and emit two monomials per stage ([`telescoping`]),
//! * the closed form over generalized pentagonal numbers ([`closed_form_series`]).
//!
//! The inverse of the product is the partition generating function
//! ([`partitions`]), and the roots of its finite partial products are
//! roots of unity with exactly predictable multiplicities ([`roots`]).
//!
//! All arithmetic is exact over [`num_bigint::BigInt`].

pub mod error;
pub mod partitions;
pub mod pentagonal;
pub mod roots;
pub mod series;
pub mod telescoping;

pub use error::{Error, Result};
pub use partitions::{
    iterated_division_check, partition_bruteforce, partition_count, partition_series,
    PartitionTable,
};
pub use pentagonal::{closed_form_series, gpent, pent_terms_upto, PentTerm};
pub use roots::{cyclotomic, poly_divrem, root_multiplicity, totient, CyclotomicCache, IntPolynomial};
pub use series::{partial_product, Coefficient, Sign, TruncatedSeries};
pub use telescoping::{
    method1_stream, method2_stream, residual_series, series_from_terms, stage_requirement, verify_stage, Method,
    Method1Stream, Method2Stream, StageState, Term,
};
