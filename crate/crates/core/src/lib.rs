//! Deterministic construction of short codeword sets over the binary and DNA
//! alphabets, together with a brute-force constraint verifier.
//!
//! The centrepiece is [`detwords::det_words`]: a greedy conditional-expectation
//! derandomizer that fills an `n x l` binary matrix one cell at a time so that
//! the rows form a code satisfying a pairwise Hamming-distance constraint and
//! its shifted variant. All expectations are kept as exact dyadic rationals,
//! so the greedy invariant is checked without any rounding. On top of that,
//! [`transform`] and [`pipeline`] convert such binary codes into DNA codes
//! satisfying larger constraint families (reverse-complement distances,
//! GC content, bounded runs), and [`constraint`] re-checks every output
//! directly from the constraint definitions.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI live
//! in the companion `dnaword` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bench;
pub mod constraint;
pub mod detwords;
pub mod dyadic;
pub mod error;
pub mod expectation;
pub mod length;
pub mod pipeline;
pub mod transform;
pub mod word;

pub use constraint::{ConstraintId, ConstraintSet, ConstraintSpec, EnergyTable, ViolationReport};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use word::{Alphabet, Code, Word};
