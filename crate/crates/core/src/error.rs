use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series exponential needs a zero constant term")]
    NonZeroConstantTerm,

    #[error("series inverse needs a nonzero constant term")]
    ZeroConstantTerm,

    #[error("binomial polynomial index must be at least 1")]
    ZeroBinomialIndex,

    #[error("log series of z/(e^z-1) needs order at least 1")]
    EmptyLogSeries,

    #[error("denominator set is empty")]
    EmptyDenominatorSet,

    #[error("denominator set element {value} at position {index} is not a positive integer")]
    NonPositiveElement { index: usize, value: i128 },

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("precondition: pairwise coprime")]
    NotPairwiseCoprime,

    #[error("precondition: gcd of the elements is {gcd}, expected 1")]
    GcdNotOne { gcd: u64 },

    #[error("Frobenius number undefined: infinitely many gaps (gcd {gcd})")]
    FrobeniusUndefined { gcd: u64 },

    #[error("Frobenius scan exceeded {limit} steps")]
    ScanLimit { limit: u64 },

    #[error("period lcm overflows 64 bits")]
    PeriodOverflow,

    #[error("interpolation needs {samples} samples, over the limit of {limit}")]
    CostLimit { samples: u128, limit: u128 },

    #[error("interpolant for residue {residue} disagrees with the count at t = {t}")]
    InterpolationMismatch { residue: u64, t: u64 },
}
