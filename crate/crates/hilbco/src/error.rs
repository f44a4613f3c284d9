//! Error type shared by every layer of the crate.

use thiserror::Error;

/// Errors raised by ideal arithmetic, length counting, fitting and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count mismatch ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("ideal operands belong to different semigroups")]
    SemigroupMismatch,

    #[error("quotient has infinite length")]
    InfiniteLength,

    #[error("colon by the zero ideal is undefined")]
    ColonByZeroIdeal,

    #[error("operation requires a proper ideal")]
    UnitIdeal,

    #[error("the defining ideal of a quotient ring must be proper")]
    ImproperDefiningIdeal,

    #[error("ring has dimension zero; analysis requires positive dimension")]
    ZeroDimensionalRing,

    #[error("ideal {0} is not primary to the maximal ideal")]
    NotMPrimary(String),

    #[error("Q must be contained in K")]
    QNotContainedInK,

    #[error("{0} is not supported on the affine semigroup backend")]
    UnsupportedOnSemigroup(&'static str),

    #[error("element is zero in the quotient ring")]
    ZeroElement,

    #[error("element must be a non-unit monomial")]
    UnitElement,

    #[error("the element must lie in Q")]
    ElementOutsideQ,

    #[error("membership query {0:?} exceeds the enumeration bound {1}")]
    BoundExceeded(Vec<u64>, u64),

    #[error("invalid semigroup data: {0}")]
    InvalidSemigroup(String),

    #[error("invalid job: {0}")]
    InvalidJob(String),

    #[error("generator {0:?} does not lie in the semigroup")]
    NotInSemigroup(Vec<u64>),

    #[error("semigroup colength stayed uncertified up to bound {bound} ({retries} doublings); pass a larger bound")]
    Uncertified { bound: u64, retries: u32 },

    #[error("enumeration box for the membership table is too large ({cells} cells)")]
    TableTooLarge { cells: u128 },

    #[error("{kind} sequence does not stabilize at degree {degree} over a window of {window}; increase N (currently {n_max})")]
    NoStabilization {
        kind: &'static str,
        degree: usize,
        window: usize,
        n_max: usize,
    },

    #[error("{kind} sequence grows with degree {observed} instead of the expected {expected}")]
    DegreeMismatch {
        kind: &'static str,
        expected: usize,
        observed: usize,
    },

    #[error("fitting degree {degree} with window {window} needs a table up to N >= {needed}, got {n_max}")]
    WindowTooLarge {
        degree: usize,
        window: usize,
        needed: usize,
        n_max: usize,
    },

    #[error("Q is not a parameter ideal: {0}")]
    NotParameterIdeal(String),

    #[error("J is not a reduction of Q within {0} steps")]
    NotAReduction(usize),

    #[error("the recurrence route supports dimension 2 only (ring has dimension {0})")]
    UnsupportedDimension(usize),

    #[error("recurrence tail has not reached zero by N = {0}; increase N")]
    NonStabilizedTail(usize),

    #[error("value does not fit the exact JSON integer range")]
    JsonRange,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
