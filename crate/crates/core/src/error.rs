use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid cyclic action: {0}")]
    InvalidAction(String),

    #[error("invalid surface parameters (a={a}, b={b}, d={d}): {reason}")]
    InvalidSurface {
        a: u32,
        b: u32,
        d: u32,
        reason: String,
    },

    #[error("exponent vector {0:?} is not invariant under the action")]
    NotInvariant(Vec<u32>),

    #[error("degree {degree} is not a positive multiple of the group order {order}")]
    DegreeNotMultiple { degree: u64, order: u32 },

    #[error("no zero-sum sub-multiset of size {order} found in {exponents:?}")]
    NoZeroSumSubsequence { exponents: Vec<u32>, order: u32 },

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("discrepancy: {0}")]
    Discrepancy(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, GtError>;
