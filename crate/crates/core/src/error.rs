use thiserror::Error;

use crate::search::SearchCounters;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in the chosen integer type")]
    Overflow,

    #[error("elementary symmetric index {k} exceeds the {len} available weights")]
    ElemSymIndex { k: usize, len: usize },

    #[error("partition parts must be positive")]
    ZeroPart,

    #[error("partition part {part} exceeds complex dimension {n}")]
    PartTooLarge { part: usize, n: usize },

    #[error("partition degree {degree} exceeds complex dimension {n}")]
    DegreeTooLarge { degree: usize, n: usize },

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(String),

    #[error("points in a group do not share a residue signature mod {m}")]
    SignatureMismatch { m: String },

    #[error("group has no weights divisible by {m}")]
    EmptyRestriction { m: String },

    #[error("group is empty")]
    EmptyGroup,

    #[error("signature class of {size} points exceeds the grouping limit of {limit}")]
    GroupTooLarge { size: usize, limit: usize },

    #[error("invalid search spec: {0}")]
    InvalidSpec(String),

    #[error("search truncated after {} generated candidates (cap {cap})", partial.generated)]
    Truncated { cap: u64, partial: Box<SearchCounters> },
}
