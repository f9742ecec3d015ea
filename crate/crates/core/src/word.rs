//! Alphabets, words and codes, plus the elementary string operations
//! everything else consumes.
//!
//! Positions are 1-based in every public contract (`substring(w, 2, 3)` is
//! the second and third characters); storage is 0-based internally.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The two supported alphabets: `{0,1}` and `{A,C,G,T}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    Binary,
    Dna,
}

impl Alphabet {
    /// Symbols in canonical order (`0,1` / `A,C,G,T`).
    pub fn symbols(self) -> &'static [u8] {
        match self {
            Alphabet::Binary => b"01",
            Alphabet::Dna => b"ACGT",
        }
    }

    pub fn size(self) -> usize {
        self.symbols().len()
    }

    pub fn contains(self, symbol: u8) -> bool {
        self.symbols().contains(&symbol)
    }

    /// Character complement: `0 <-> 1`, `A <-> T`, `C <-> G`.
    /// An involution on the alphabet's symbols.
    pub fn complement(self, symbol: u8) -> u8 {
        match (self, symbol) {
            (Alphabet::Binary, b'0') => b'1',
            (Alphabet::Binary, b'1') => b'0',
            (Alphabet::Dna, b'A') => b'T',
            (Alphabet::Dna, b'T') => b'A',
            (Alphabet::Dna, b'C') => b'G',
            (Alphabet::Dna, b'G') => b'C',
            _ => symbol,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Binary => write!(f, "binary"),
            Alphabet::Dna => write!(f, "DNA"),
        }
    }
}

/// A fixed-length sequence of symbols from one alphabet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet: Alphabet,
    chars: Vec<u8>,
}

impl Word {
    /// Builds a word, validating every character against the alphabet.
    pub fn new(alphabet: Alphabet, chars: impl AsRef<[u8]>) -> Result<Word> {
        let chars = chars.as_ref();
        for &c in chars {
            if !alphabet.contains(c) {
                return Err(Error::InvalidSymbol { symbol: c, alphabet });
            }
        }
        Ok(Word { alphabet, chars: chars.to_vec() })
    }

    /// Binary word from bits (`false` = 0, `true` = 1).
    pub fn from_bits(bits: &[bool]) -> Word {
        let chars = bits.iter().map(|&b| if b { b'1' } else { b'0' }).collect();
        Word { alphabet: Alphabet::Binary, chars }
    }

    pub(crate) fn from_raw(alphabet: Alphabet, chars: Vec<u8>) -> Word {
        debug_assert!(chars.iter().all(|&c| alphabet.contains(c)));
        Word { alphabet, chars }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.chars
    }

    pub fn as_str(&self) -> &str {
        // symbols are ASCII by construction
        core::str::from_utf8(&self.chars).expect("words are ASCII")
    }

    /// The word read right to left.
    pub fn reverse(&self) -> Word {
        let chars = self.chars.iter().rev().copied().collect();
        Word { alphabet: self.alphabet, chars }
    }

    /// Character-wise complement.
    pub fn complement(&self) -> Word {
        let a = self.alphabet;
        let chars = self.chars.iter().map(|&c| a.complement(c)).collect();
        Word { alphabet: a, chars }
    }

    /// Complement of the reverse. Complement and reverse commute, so the
    /// order is immaterial.
    pub fn reverse_complement(&self) -> Word {
        let a = self.alphabet;
        let chars = self.chars.iter().rev().map(|&c| a.complement(c)).collect();
        Word { alphabet: a, chars }
    }

    /// Number of positions where `self` and `other` differ.
    pub fn hamming(&self, other: &Word) -> Result<usize> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { left: self.alphabet, right: other.alphabet });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(hamming_bytes(&self.chars, &other.chars))
    }

    /// Substring `x_i .. x_j` inclusive, 1-based, requiring `1 <= i <= j <= len`.
    pub fn substring(&self, i: usize, j: usize) -> Result<Word> {
        if i < 1 || i > j || j > self.len() {
            return Err(Error::IndexOutOfRange { i, j, len: self.len() });
        }
        Ok(Word { alphabet: self.alphabet, chars: self.chars[i - 1..j].to_vec() })
    }

    /// Length of the longest run of identical characters (0 for the empty word).
    pub fn max_run(&self) -> usize {
        let mut best = 0;
        let mut cur = 0;
        let mut prev = None;
        for &c in &self.chars {
            cur = if prev == Some(c) { cur + 1 } else { 1 };
            best = best.max(cur);
            prev = Some(c);
        }
        best
    }

    /// Number of `G`/`C` characters (0 for binary words).
    pub fn gc_count(&self) -> usize {
        self.chars.iter().filter(|&&c| c == b'G' || c == b'C').count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn hamming_bytes(a: &[u8], b: &[u8]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// A set of `n` pairwise-distinct words of one common length over one alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    alphabet: Alphabet,
    word_len: usize,
    words: Vec<Word>,
}

impl Code {
    pub fn new(words: Vec<Word>) -> Result<Code> {
        let first = words.first().ok_or(Error::InvalidParameter { what: "a code needs at least one word" })?;
        let alphabet = first.alphabet();
        let word_len = first.len();
        let mut seen = BTreeSet::new();
        for (idx, w) in words.iter().enumerate() {
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch { left: alphabet, right: w.alphabet() });
            }
            if w.len() != word_len {
                return Err(Error::LengthMismatch { left: word_len, right: w.len() });
            }
            if !seen.insert(w.as_bytes().to_vec()) {
                return Err(Error::DuplicateWord { index: idx + 1 });
            }
        }
        Ok(Code { alphabet, word_len, words })
    }

    /// Convenience constructor from string literals, mostly for tests.
    pub fn from_strs(alphabet: Alphabet, strs: &[&str]) -> Result<Code> {
        let words = strs
            .iter()
            .map(|s| Word::new(alphabet, s.as_bytes()))
            .collect::<Result<Vec<_>>>()?;
        Code::new(words)
    }

    pub fn n(&self) -> usize {
        self.words.len()
    }

    /// The common word length l.
    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// 0-based access.
    pub fn word(&self, idx: usize) -> &Word {
        &self.words[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(a: Alphabet, s: &str) -> Word {
        Word::new(a, s.as_bytes()).unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w(Alphabet::Dna, "ACGT").reverse(), w(Alphabet::Dna, "TGCA"));
        assert_eq!(w(Alphabet::Dna, "").reverse(), w(Alphabet::Dna, ""));
        assert_eq!(w(Alphabet::Binary, "0110").reverse(), w(Alphabet::Binary, "0110"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w(Alphabet::Dna, "ACGT").complement(), w(Alphabet::Dna, "TGCA"));
        assert_eq!(w(Alphabet::Binary, "01").complement(), w(Alphabet::Binary, "10"));
        let g = w(Alphabet::Dna, "GATTACA");
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(w(Alphabet::Dna, "AACG").reverse_complement(), w(Alphabet::Dna, "CGTT"));
        let self_rc = w(Alphabet::Dna, "ACGT");
        assert_eq!(self_rc.reverse_complement(), self_rc);
        assert_eq!(w(Alphabet::Binary, "00").reverse_complement(), w(Alphabet::Binary, "11"));
        // complement and reverse commute
        let x = w(Alphabet::Dna, "GATC");
        assert_eq!(x.reverse().complement(), x.complement().reverse());
    }

    #[test]
    fn hamming_examples() {
        let a = w(Alphabet::Dna, "ACGT");
        let b = w(Alphabet::Dna, "AGGT");
        assert_eq!(a.hamming(&b).unwrap(), 1);
        assert_eq!(a.hamming(&a).unwrap(), 0);
        let z = w(Alphabet::Binary, "0000");
        let o = w(Alphabet::Binary, "1111");
        assert_eq!(z.hamming(&o).unwrap(), 4);
        assert!(matches!(
            z.hamming(&w(Alphabet::Binary, "00")),
            Err(Error::LengthMismatch { left: 4, right: 2 })
        ));
        assert!(matches!(z.hamming(&a), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn substring_examples() {
        let x = w(Alphabet::Dna, "ACGT");
        assert_eq!(x.substring(2, 3).unwrap(), w(Alphabet::Dna, "CG"));
        assert_eq!(x.substring(1, 4).unwrap(), x);
        assert_eq!(x.substring(3, 3).unwrap(), w(Alphabet::Dna, "G"));
        assert!(matches!(x.substring(0, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(x.substring(3, 5), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(x.substring(3, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn run_and_gc_helpers() {
        assert_eq!(w(Alphabet::Dna, "AAAT").max_run(), 3);
        assert_eq!(w(Alphabet::Dna, "ATAT").max_run(), 1);
        assert_eq!(w(Alphabet::Dna, "").max_run(), 0);
        assert_eq!(w(Alphabet::Dna, "GCAT").gc_count(), 2);
        assert_eq!(w(Alphabet::Binary, "0101").gc_count(), 0);
    }

    #[test]
    fn code_validation() {
        let c = Code::from_strs(Alphabet::Binary, &["00", "11"]).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.word_len(), 2);
        assert!(matches!(
            Code::from_strs(Alphabet::Binary, &["00", "00"]),
            Err(Error::DuplicateWord { index: 2 })
        ));
        assert!(matches!(
            Code::from_strs(Alphabet::Binary, &["00", "000"]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Code::new(vec![
                w(Alphabet::Binary, "00"),
                w(Alphabet::Dna, "AT"),
            ]),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(Code::new(vec![]).is_err());
    }

    #[test]
    fn invalid_symbol_rejected() {
        assert!(matches!(
            Word::new(Alphabet::Binary, b"012"),
            Err(Error::InvalidSymbol { symbol: b'2', .. })
        ));
        assert!(Word::new(Alphabet::Dna, b"ACGU").is_err());
    }
}
