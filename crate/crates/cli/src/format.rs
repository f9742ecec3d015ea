//! The code file format: UTF-8 text, one word per line over {0,1} or
//! {A,C,G,T}, newline-terminated, no trailing whitespace. Lines starting
//! with '#' are comments; blank lines are ignored.

use std::fmt;
use std::fs;
use std::path::Path;

use dnaword_core::word::{Alphabet, Code, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Renders a code deterministically: words in order, one per line, with a
/// trailing newline and nothing else.
pub fn render_code(code: &Code) -> String {
    let mut out = String::with_capacity(code.n() * (code.word_len() + 1));
    for w in code.words() {
        out.push_str(w.as_str());
        out.push('\n');
    }
    out
}

pub fn parse_code(text: &str) -> Result<Code, ParseError> {
    let mut raw: Vec<(usize, &str)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim_end() != line {
            return Err(ParseError { line: lineno, message: "trailing whitespace".into() });
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        raw.push((lineno, line));
    }
    if raw.is_empty() {
        return Err(ParseError { line: 1, message: "no words in file".into() });
    }

    let binary = raw.iter().all(|(_, w)| w.bytes().all(|c| c == b'0' || c == b'1'));
    let alphabet = if binary { Alphabet::Binary } else { Alphabet::Dna };

    let mut words = Vec::with_capacity(raw.len());
    let mut seen_lines: Vec<usize> = Vec::new();
    for (lineno, text) in raw {
        let word = Word::new(alphabet, text.as_bytes())
            .map_err(|e| ParseError { line: lineno, message: e.to_string() })?;
        words.push(word);
        seen_lines.push(lineno);
    }

    Code::new(words).map_err(|e| {
        // point at the offending line where the library names an index
        let line = match e {
            dnaword_core::Error::DuplicateWord { index } => seen_lines[index - 1],
            _ => seen_lines[seen_lines.len() - 1],
        };
        ParseError { line, message: e.to_string() }
    })
}

pub fn read_code_file(path: &Path) -> Result<Code, CodeFileError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CodeFileError::Io(format!("{}: {e}", path.display())))?;
    parse_code(&text).map_err(|e| CodeFileError::Parse(format!("{}: {e}", path.display())))
}

pub fn write_code_file(path: &Path, code: &Code) -> Result<(), CodeFileError> {
    fs::write(path, render_code(code))
        .map_err(|e| CodeFileError::Io(format!("{}: {e}", path.display())))
}

#[derive(Debug)]
pub enum CodeFileError {
    Io(String),
    Parse(String),
}

impl fmt::Display for CodeFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeFileError::Io(m) => write!(f, "io error: {m}"),
            CodeFileError::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl std::error::Error for CodeFileError {}

/// Energy table file: a JSON array of 16 integers, row-major in base order
/// A, C, G, T (row = first base of the ordered pair).
pub fn parse_energy_table(text: &str) -> Result<dnaword_core::EnergyTable, String> {
    let values: Vec<i64> =
        serde_json::from_str(text).map_err(|e| format!("invalid energy table JSON: {e}"))?;
    let flat: [i64; 16] = values
        .try_into()
        .map_err(|v: Vec<i64>| format!("energy table needs 16 entries, got {}", v.len()))?;
    Ok(dnaword_core::EnergyTable::from_flat(flat))
}

pub fn read_energy_table(path: &Path) -> Result<dnaword_core::EnergyTable, CodeFileError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CodeFileError::Io(format!("{}: {e}", path.display())))?;
    parse_energy_table(&text).map_err(|m| CodeFileError::Parse(format!("{}: {m}", path.display())))
}
