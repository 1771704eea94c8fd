use thiserror::Error;

/// Errors raised by group arithmetic and the algorithms layered on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} outside supported range 1..={max}", max = crate::weyl::MAX_DEGREE)]
    UnsupportedDegree(usize),

    #[error("not a permutation of 1..={degree}: {detail}")]
    InvalidPermutation { degree: usize, detail: String },

    #[error("element {element} is not a member of W({family}{degree})")]
    NotMember {
        element: String,
        family: char,
        degree: usize,
    },

    #[error("malformed sign bits: {0}")]
    MalformedBits(String),

    #[error("malformed cycle notation: {0}")]
    MalformedCycles(String),

    #[error("repeated index {0} in cycle notation")]
    RepeatedIndex(usize),

    #[error("index {index} out of range 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("element {0} does not belong to this rack")]
    ForeignElement(String),

    #[error("set is not closed under the rack operation")]
    NotClosed,

    #[error("subgroup closure exceeded cap of {0} elements")]
    CapExceeded(usize),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no case row matches sign vector {0}")]
    NoCaseRow(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
