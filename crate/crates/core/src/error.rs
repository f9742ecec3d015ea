//! Error type shared by every module of the crate.

use core::fmt;

use crate::constraint::ConstraintId;
use crate::word::Alphabet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two words (or rows) that must have equal length do not.
    LengthMismatch { left: usize, right: usize },
    /// Two words that must share an alphabet do not.
    AlphabetMismatch { left: Alphabet, right: Alphabet },
    /// 1-based substring indices outside `1 <= i <= j <= len`.
    IndexOutOfRange { i: usize, j: usize, len: usize },
    /// An operation got a word/code over the wrong alphabet.
    InvalidAlphabet { expected: Alphabet, found: Alphabet },
    /// A character outside the word's alphabet.
    InvalidSymbol { symbol: u8, alphabet: Alphabet },
    /// A code must hold pairwise distinct words; `index` is the 1-based
    /// position of the first repeat.
    DuplicateWord { index: usize },
    /// A parameter violates an operation's precondition.
    InvalidParameter { what: &'static str },
    /// The derandomizer base case fails at this word length: the blank-matrix
    /// expectation does not exceed `slots - 1`, so no run is attempted.
    InfeasibleLength { ell: usize },
    /// A generated code failed its own post-generation verification. This is
    /// a bug trap: `total` violations were reported, the first one against
    /// `constraint`.
    VerificationFailed { constraint: ConstraintId, total: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::AlphabetMismatch { left, right } => {
                write!(f, "alphabet mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { i, j, len } => {
                write!(f, "substring indices ({i},{j}) out of range for length {len}")
            }
            Error::InvalidAlphabet { expected, found } => {
                write!(f, "expected a {expected} word, got {found}")
            }
            Error::InvalidSymbol { symbol, alphabet } => {
                write!(f, "symbol {:?} not in the {alphabet} alphabet", *symbol as char)
            }
            Error::DuplicateWord { index } => {
                write!(f, "duplicate word at position {index}")
            }
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::InfeasibleLength { ell } => {
                write!(
                    f,
                    "length {ell} is infeasible: blank-matrix expectation does not exceed slots - 1"
                )
            }
            Error::VerificationFailed { constraint, total } => {
                write!(
                    f,
                    "post-generation verification failed: {total} violation(s), first against {constraint}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
