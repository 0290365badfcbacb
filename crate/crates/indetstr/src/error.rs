use std::fmt;

use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by parsing, encoding and the array algorithms.
///
/// Positions in parse errors are 1-based character offsets into the input,
/// matching the 1-based indexing used everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("empty strings are not representable (length must be at least 1)")]
    EmptyString,
    #[error("alphabet must contain at least one character")]
    EmptyAlphabet,
    #[error("duplicate character {ch:?} in alphabet")]
    DuplicateAlphabetChar { ch: char },
    #[error("character {ch:?} is reserved by the text format")]
    ReservedChar { ch: char },
    #[error("code width of {width} bits cannot hold {needed} letter codes")]
    CodeWidthOverflow { width: u8, needed: u64 },
    #[error("string has {distinct} distinct indeterminate letters but the alphabet allows {sigma_star}")]
    CapacityExceeded { distinct: u32, sigma_star: u32 },
    #[error("character rank {rank} out of range 1..={sigma}")]
    RankOutOfRange { rank: u32, sigma: u32 },
    #[error("a letter must contain at least one character")]
    EmptyLetter,
    #[error("duplicate character rank {rank} in letter")]
    DuplicateRank { rank: u32 },
    #[error("code {code} has no indeterminate-table entry")]
    DanglingCode { code: u32 },
    #[error("indeterminate-table slot {slot} points outside the character pool")]
    PoolRange { slot: usize },
    #[error("character pool segment for slot {slot} is not strictly ascending")]
    PoolOrder { slot: usize },
    #[error("indeterminate-table slot {slot} has scope {scope}; expected at least 2")]
    PoolScope { slot: usize, scope: u32 },
    #[error("match matrix is not reflexive and symmetric")]
    InvalidMatrix,
    #[error("malformed separator pattern: {msg}")]
    MalformedStar { msg: String },
    #[error("infeasible palindrome array: {0}")]
    Infeasible(Infeasibility),
    #[error("probe (centre {centre}, range {range}) is out of bounds")]
    ProbeOutOfRange { centre: usize, range: usize },
    #[error("malformed binary data: {msg}")]
    MalformedBinary { msg: String },
}

/// The first violated feasibility condition of a palindrome array, by
/// ascending position; condition (b) is reported before (a) at equal
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infeasibility {
    /// A palindrome array must have odd length.
    EvenLength { m: usize },
    /// Value out of the bounds `(1 - j mod 2)..=min(j-1, m-j)`.
    ConditionA { j: usize },
    /// Value parity must be opposite to the position parity.
    ConditionB { j: usize },
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::EvenLength { m } => write!(f, "even length m={m}"),
            Infeasibility::ConditionA { j } => write!(f, "condition (a) at j={j}"),
            Infeasibility::ConditionB { j } => write!(f, "condition (b) at j={j}"),
        }
    }
}
