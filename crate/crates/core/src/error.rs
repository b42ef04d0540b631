use thiserror::Error;

/// Errors raised by the series engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty series")]
    EmptySeries,

    #[error("zero factor exponent")]
    ZeroFactorExponent,

    #[error("non-unit constant term")]
    NonUnitConstantTerm,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("stage index must be at least 1")]
    ZeroStage,

    #[error("order below stage emissions: stage {stage} needs exponent {needed}, order is {order}")]
    OrderBelowStage { stage: usize, needed: u64, order: usize },

    #[error("oracle bound exceeded: n = {0} (limit {limit})", limit = crate::partitions::BRUTEFORCE_LIMIT)]
    OracleBoundExceeded(usize),

    #[error("insufficient order: N = {order} < M = {depth}")]
    InsufficientOrder { order: usize, depth: usize },

    #[error("internal division failure")]
    InternalDivisionFailure,

    #[error("non-monic divisor")]
    NonMonicDivisor,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("cyclotomic index {0} out of range 1..={max}", max = crate::roots::MAX_CYCLOTOMIC_INDEX)]
    CyclotomicIndex(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
