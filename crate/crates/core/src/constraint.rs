//! Direct-from-definition verifiers for the nine constraints C1..C9.
//!
//! These are the ground-truth oracle for every generated code: each check
//! walks the quantifiers of its constraint definition literally, with no
//! shortcuts. Cost is O(n^2 * l * k) for the shifting constraints; clarity
//! wins over speed here.
//!
//! Word indices in reports are 1-based, as are shift offsets `i`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{hamming_bytes, Alphabet, Code, Word};

/// Identifiers for the nine constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl ConstraintId {
    pub const ALL: [ConstraintId; 9] = [
        ConstraintId::C1,
        ConstraintId::C2,
        ConstraintId::C3,
        ConstraintId::C4,
        ConstraintId::C5,
        ConstraintId::C6,
        ConstraintId::C7,
        ConstraintId::C8,
        ConstraintId::C9,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintId::C1 => "c1",
            ConstraintId::C2 => "c2",
            ConstraintId::C3 => "c3",
            ConstraintId::C4 => "c4",
            ConstraintId::C5 => "c5",
            ConstraintId::C6 => "c6",
            ConstraintId::C7 => "c7",
            ConstraintId::C8 => "c8",
            ConstraintId::C9 => "c9",
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for ConstraintId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A small set of constraint identifiers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet(u16);

impl ConstraintSet {
    pub fn empty() -> ConstraintSet {
        ConstraintSet(0)
    }

    pub fn of(ids: &[ConstraintId]) -> ConstraintSet {
        let mut s = ConstraintSet(0);
        for &id in ids {
            s.insert(id);
        }
        s
    }

    pub fn insert(&mut self, id: ConstraintId) {
        self.0 |= id.bit();
    }

    pub fn contains(&self, id: ConstraintId) -> bool {
        self.0 & id.bit() != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Members in C1..C9 order.
    pub fn iter(&self) -> impl Iterator<Item = ConstraintId> + '_ {
        ConstraintId::ALL.iter().copied().filter(|id| self.contains(*id))
    }
}

/// Parameters for the constraint family: `k1..k6` dissimilarity bounds,
/// GC fraction `gamma`, run bound `d`, free-energy tolerance `sigma`, and
/// the set of constraints to enforce.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintSpec {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
    pub k5: usize,
    pub k6: usize,
    pub gamma: f64,
    pub d: usize,
    pub sigma: f64,
    pub enabled: ConstraintSet,
}

impl ConstraintSpec {
    /// All six dissimilarity parameters set to `k`; gamma 0.5, d 2, sigma 0,
    /// nothing enabled yet.
    pub fn uniform(k: usize) -> ConstraintSpec {
        ConstraintSpec {
            k1: k,
            k2: k,
            k3: k,
            k4: k,
            k5: k,
            k6: k,
            gamma: 0.5,
            d: 2,
            sigma: 0.0,
            enabled: ConstraintSet::empty(),
        }
    }

    pub fn with_enabled(mut self, ids: &[ConstraintId]) -> ConstraintSpec {
        self.enabled = ConstraintSet::of(ids);
        self
    }
}

impl Default for ConstraintSpec {
    fn default() -> ConstraintSpec {
        ConstraintSpec::uniform(0)
    }
}

/// 4x4 pairwise free-energy table indexed by ordered DNA base pairs,
/// base order A, C, G, T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyTable {
    entries: [[i64; 4]; 4],
}

impl EnergyTable {
    pub fn new(entries: [[i64; 4]; 4]) -> EnergyTable {
        EnergyTable { entries }
    }

    /// From a 16-entry row-major array (row = first base, col = second base).
    pub fn from_flat(flat: [i64; 16]) -> EnergyTable {
        let mut entries = [[0i64; 4]; 4];
        for (i, v) in flat.into_iter().enumerate() {
            entries[i / 4][i % 4] = v;
        }
        EnergyTable { entries }
    }

    pub fn uniform(v: i64) -> EnergyTable {
        EnergyTable { entries: [[v; 4]; 4] }
    }

    pub fn to_flat(&self) -> [i64; 16] {
        let mut flat = [0i64; 16];
        for r in 0..4 {
            for c in 0..4 {
                flat[r * 4 + c] = self.entries[r][c];
            }
        }
        flat
    }

    fn base_index(base: u8) -> usize {
        match base {
            b'A' => 0,
            b'C' => 1,
            b'G' => 2,
            b'T' => 3,
            _ => unreachable!("validated DNA base"),
        }
    }

    /// Entry for the ordered pair (first, second).
    pub fn get(&self, first: u8, second: u8) -> i64 {
        self.entries[Self::base_index(first)][Self::base_index(second)]
    }

    pub fn max(&self) -> i64 {
        *self.entries.iter().flatten().max().expect("non-empty")
    }

    pub fn min(&self) -> i64 {
        *self.entries.iter().flatten().min().expect("non-empty")
    }

    /// `D = max - min`.
    pub fn spread(&self) -> i64 {
        self.max() - self.min()
    }
}

/// Which part of the words a shifted violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Whole,
    Prefix,
    Suffix,
}

/// The witness of a violation: one word index or an ordered pair (Y, X),
/// all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Single { word: usize },
    Pair { y: usize, x: usize },
}

/// One concrete constraint violation.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub constraint: ConstraintId,
    pub witness: Witness,
    /// Shift case `i` for C4/C5/C6; run start position for C8.
    pub offset: Option<usize>,
    pub part: Part,
    /// The measured quantity (Hamming distance, GC count, run length,
    /// free-energy spread).
    pub measured: f64,
    /// The bound it had to meet.
    pub required: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constraint)?;
        match self.witness {
            Witness::Single { word } => write!(f, " word {word}")?,
            Witness::Pair { y, x } => write!(f, " pair ({y},{x})")?,
        }
        if let Some(i) = self.offset {
            write!(f, " i={i}")?;
        }
        match self.part {
            Part::Whole => {}
            Part::Prefix => write!(f, " prefix")?,
            Part::Suffix => write!(f, " suffix")?,
        }
        match self.constraint {
            ConstraintId::C7 => write!(f, ": gc count {} != {}", self.measured, self.required),
            ConstraintId::C8 => write!(f, ": run {} > {}", self.measured, self.required),
            ConstraintId::C9 => write!(f, ": FE spread {} > {}", self.measured, self.required),
            _ => write!(f, ": H = {} < {}", self.measured, self.required),
        }
    }
}

/// Default cap on stored violations per report.
pub const DEFAULT_VIOLATION_LIMIT: usize = 100;

/// Violations in normalized order (constraint id, then witness indices, then
/// offset). Only the first `limit` are stored; `total` counts all of them.
#[derive(Clone, Debug, PartialEq)]
pub struct ViolationReport {
    items: Vec<Violation>,
    total: usize,
    limit: usize,
}

impl ViolationReport {
    pub fn new(limit: usize) -> ViolationReport {
        ViolationReport { items: Vec::new(), total: 0, limit }
    }

    fn push(&mut self, v: Violation) {
        self.total += 1;
        if self.items.len() < self.limit {
            self.items.push(v);
        }
    }

    fn absorb(&mut self, other: ViolationReport) {
        self.total += other.total;
        for v in other.items {
            if self.items.len() < self.limit {
                self.items.push(v);
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn items(&self) -> &[Violation] {
        &self.items
    }
}

/// Exact GC target `ceil(gamma * l)` shared by the verifier and every
/// generator, so both sides agree bit for bit.
pub fn gc_target(gamma: f64, ell: usize) -> usize {
    libm::ceil(gamma * ell as f64) as usize
}

fn require_k(k: usize, ell: usize, what: &'static str) -> Result<()> {
    if k > ell {
        return Err(Error::InvalidParameter { what });
    }
    Ok(())
}

fn require_dna(code: &Code) -> Result<()> {
    if code.alphabet() != Alphabet::Dna {
        return Err(Error::InvalidAlphabet { expected: Alphabet::Dna, found: code.alphabet() });
    }
    Ok(())
}

/// C1: every unordered pair of distinct words has Hamming distance >= k1.
pub fn check_c1(code: &Code, k1: usize) -> Result<ViolationReport> {
    require_k(k1, code.word_len(), "k1 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let words = code.words();
    for y in 0..words.len() {
        for x in y + 1..words.len() {
            let h = hamming_bytes(words[y].as_bytes(), words[x].as_bytes());
            if h < k1 {
                report.push(Violation {
                    constraint: ConstraintId::C1,
                    witness: Witness::Pair { y: y + 1, x: x + 1 },
                    offset: None,
                    part: Part::Whole,
                    measured: h as f64,
                    required: k1 as f64,
                });
            }
        }
    }
    Ok(report)
}

/// C2: for every ordered pair of distinct words, H(Y, X^RC) >= k2.
pub fn check_c2(code: &Code, k2: usize) -> Result<ViolationReport> {
    require_k(k2, code.word_len(), "k2 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let words = code.words();
    let rcs: Vec<Word> = words.iter().map(Word::reverse_complement).collect();
    for (y, word) in words.iter().enumerate() {
        for (x, rc) in rcs.iter().enumerate() {
            if x == y {
                continue;
            }
            let h = hamming_bytes(word.as_bytes(), rc.as_bytes());
            if h < k2 {
                report.push(Violation {
                    constraint: ConstraintId::C2,
                    witness: Witness::Pair { y: y + 1, x: x + 1 },
                    offset: None,
                    part: Part::Whole,
                    measured: h as f64,
                    required: k2 as f64,
                });
            }
        }
    }
    Ok(report)
}

/// C3: every word satisfies H(Y, Y^RC) >= k3.
pub fn check_c3(code: &Code, k3: usize) -> Result<ViolationReport> {
    require_k(k3, code.word_len(), "k3 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    for (y, w) in code.words().iter().enumerate() {
        let h = hamming_bytes(w.as_bytes(), w.reverse_complement().as_bytes());
        if h < k3 {
            report.push(Violation {
                constraint: ConstraintId::C3,
                witness: Witness::Single { word: y + 1 },
                offset: None,
                part: Part::Whole,
                measured: h as f64,
                required: k3 as f64,
            });
        }
    }
    Ok(report)
}

/// Hamming distance between Y's length-i prefix and X's length-i suffix.
fn shifted_hamming(y: &[u8], x: &[u8], i: usize) -> usize {
    let ell = x.len();
    hamming_bytes(&y[..i], &x[ell - i..])
}

/// C4: for every ordered pair of distinct words and every i with
/// l >= i >= l - k4, H(Y[1..i], X[(l-i+1)..l]) >= k4 - (l-i).
/// Cases with a non-positive right-hand side pass vacuously.
pub fn check_c4(code: &Code, k4: usize) -> Result<ViolationReport> {
    require_k(k4, code.word_len(), "k4 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let ell = code.word_len();
    let words = code.words();
    for y in 0..words.len() {
        for x in 0..words.len() {
            if x == y {
                continue;
            }
            // only i > l - k4 yields a positive bound
            for i in (ell - k4 + 1).max(1)..=ell {
                let bound = k4 - (ell - i);
                let h = shifted_hamming(words[y].as_bytes(), words[x].as_bytes(), i);
                if h < bound {
                    report.push(Violation {
                        constraint: ConstraintId::C4,
                        witness: Witness::Pair { y: y + 1, x: x + 1 },
                        offset: Some(i),
                        part: Part::Whole,
                        measured: h as f64,
                        required: bound as f64,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Both shifted reverse-complement families for one (Y, X, i) case:
/// prefix-vs-prefix and suffix-vs-suffix, each against the RC of the piece.
fn rc_shift_violations(
    report: &mut ViolationReport,
    constraint: ConstraintId,
    witness: Witness,
    y: &Word,
    x: &Word,
    i: usize,
    bound: usize,
) {
    let ell = y.len();
    let y_bytes = y.as_bytes();
    let prefix_rc = x.substring(1, i).expect("validated range").reverse_complement();
    let h = hamming_bytes(&y_bytes[..i], prefix_rc.as_bytes());
    if h < bound {
        report.push(Violation {
            constraint,
            witness,
            offset: Some(i),
            part: Part::Prefix,
            measured: h as f64,
            required: bound as f64,
        });
    }
    let suffix_rc = x.substring(ell - i + 1, ell).expect("validated range").reverse_complement();
    let h = hamming_bytes(&y_bytes[ell - i..], suffix_rc.as_bytes());
    if h < bound {
        report.push(Violation {
            constraint,
            witness,
            offset: Some(i),
            part: Part::Suffix,
            measured: h as f64,
            required: bound as f64,
        });
    }
}

/// C5: shifted reverse-complement constraint over ordered pairs of distinct
/// words, both prefix and suffix families, for all l >= i >= l - k5.
pub fn check_c5(code: &Code, k5: usize) -> Result<ViolationReport> {
    require_k(k5, code.word_len(), "k5 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let ell = code.word_len();
    let words = code.words();
    for y in 0..words.len() {
        for x in 0..words.len() {
            if x == y {
                continue;
            }
            for i in (ell - k5 + 1).max(1)..=ell {
                let bound = k5 - (ell - i);
                rc_shift_violations(
                    &mut report,
                    ConstraintId::C5,
                    Witness::Pair { y: y + 1, x: x + 1 },
                    &words[y],
                    &words[x],
                    i,
                    bound,
                );
            }
        }
    }
    Ok(report)
}

/// C6: the self version of C5 (each word against itself).
pub fn check_c6(code: &Code, k6: usize) -> Result<ViolationReport> {
    require_k(k6, code.word_len(), "k6 exceeds the word length")?;
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let ell = code.word_len();
    for (y, w) in code.words().iter().enumerate() {
        for i in (ell - k6 + 1).max(1)..=ell {
            let bound = k6 - (ell - i);
            rc_shift_violations(
                &mut report,
                ConstraintId::C6,
                Witness::Single { word: y + 1 },
                w,
                w,
                i,
                bound,
            );
        }
    }
    Ok(report)
}

/// C7: every word has exactly `ceil(gamma * l)` characters in {G, C}.
pub fn check_c7(code: &Code, gamma: f64) -> Result<ViolationReport> {
    require_dna(code)?;
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidParameter { what: "gamma must lie in [0, 1]" });
    }
    let target = gc_target(gamma, code.word_len());
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    for (y, w) in code.words().iter().enumerate() {
        let count = w.gc_count();
        if count != target {
            report.push(Violation {
                constraint: ConstraintId::C7,
                witness: Witness::Single { word: y + 1 },
                offset: None,
                part: Part::Whole,
                measured: count as f64,
                required: target as f64,
            });
        }
    }
    Ok(report)
}

/// C8: no word contains a run of identical characters longer than d (d >= 2).
/// One violation per maximal long run, offset = 1-based run start.
pub fn check_c8(code: &Code, d: usize) -> Result<ViolationReport> {
    if d < 2 {
        return Err(Error::InvalidParameter { what: "d must be at least 2" });
    }
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    for (y, w) in code.words().iter().enumerate() {
        let bytes = w.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] == bytes[start] {
                end += 1;
            }
            if end - start > d {
                report.push(Violation {
                    constraint: ConstraintId::C8,
                    witness: Witness::Single { word: y + 1 },
                    offset: Some(start + 1),
                    part: Part::Whole,
                    measured: (end - start) as f64,
                    required: d as f64,
                });
            }
            start = end;
        }
    }
    Ok(report)
}

/// Free energy of a DNA word: the sum of the pairwise energies over adjacent
/// ordered base pairs (correction factor zero). A length-1 word has FE = 0.
pub fn free_energy(word: &Word, table: &EnergyTable) -> Result<i64> {
    if word.alphabet() != Alphabet::Dna {
        return Err(Error::InvalidAlphabet { expected: Alphabet::Dna, found: word.alphabet() });
    }
    if word.is_empty() {
        return Err(Error::InvalidParameter { what: "free energy needs a non-empty word" });
    }
    let bytes = word.as_bytes();
    Ok(bytes.windows(2).map(|w| table.get(w[0], w[1])).sum())
}

/// C9: all pairwise free-energy differences are at most sigma, i.e.
/// max FE - min FE <= sigma. The witness is the extremal pair.
pub fn check_c9(code: &Code, table: &EnergyTable, sigma: f64) -> Result<ViolationReport> {
    require_dna(code)?;
    if sigma < 0.0 {
        return Err(Error::InvalidParameter { what: "sigma must be non-negative" });
    }
    let mut report = ViolationReport::new(DEFAULT_VIOLATION_LIMIT);
    let mut energies = Vec::with_capacity(code.n());
    for w in code.words() {
        energies.push(free_energy(w, table)?);
    }
    let (mut lo, mut hi) = (0usize, 0usize);
    for (idx, &fe) in energies.iter().enumerate() {
        if fe < energies[lo] {
            lo = idx;
        }
        if fe > energies[hi] {
            hi = idx;
        }
    }
    let spread = energies[hi] - energies[lo];
    if spread as f64 > sigma {
        report.push(Violation {
            constraint: ConstraintId::C9,
            witness: Witness::Pair { y: hi + 1, x: lo + 1 },
            offset: None,
            part: Part::Whole,
            measured: spread as f64,
            required: sigma,
        });
    }
    Ok(report)
}

/// Runs every enabled constraint in id order and concatenates the reports.
/// C9 requires an energy table.
pub fn check_all(
    code: &Code,
    spec: &ConstraintSpec,
    table: Option<&EnergyTable>,
) -> Result<ViolationReport> {
    check_all_with_limit(code, spec, table, DEFAULT_VIOLATION_LIMIT)
}

pub fn check_all_with_limit(
    code: &Code,
    spec: &ConstraintSpec,
    table: Option<&EnergyTable>,
    limit: usize,
) -> Result<ViolationReport> {
    let mut report = ViolationReport::new(limit);
    for id in spec.enabled.iter() {
        let sub = match id {
            ConstraintId::C1 => check_c1(code, spec.k1)?,
            ConstraintId::C2 => check_c2(code, spec.k2)?,
            ConstraintId::C3 => check_c3(code, spec.k3)?,
            ConstraintId::C4 => check_c4(code, spec.k4)?,
            ConstraintId::C5 => check_c5(code, spec.k5)?,
            ConstraintId::C6 => check_c6(code, spec.k6)?,
            ConstraintId::C7 => check_c7(code, spec.gamma)?,
            ConstraintId::C8 => check_c8(code, spec.d)?,
            ConstraintId::C9 => {
                let table = table.ok_or(Error::InvalidParameter {
                    what: "C9 verification requires an energy table",
                })?;
                check_c9(code, table, spec.sigma)?
            }
        };
        report.absorb(sub);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet::{Binary, Dna};

    #[test]
    fn c1_examples() {
        let code = Code::from_strs(Binary, &["00", "11"]).unwrap();
        assert!(check_c1(&code, 2).unwrap().is_empty());
        let code = Code::from_strs(Binary, &["00", "01"]).unwrap();
        let report = check_c1(&code, 2).unwrap();
        assert_eq!(report.total(), 1);
        let v = &report.items()[0];
        assert_eq!(v.witness, Witness::Pair { y: 1, x: 2 });
        assert_eq!(v.measured, 1.0);
        assert!(check_c1(&code, 0).unwrap().is_empty());
        assert!(check_c1(&code, 3).is_err());
    }

    #[test]
    fn c4_examples() {
        let code = Code::from_strs(Binary, &["0011", "1100"]).unwrap();
        assert!(check_c4(&code, 1).unwrap().is_empty());

        // ({"01","10"}, k4=2): i=1 fails in both directions, i=2 holds
        let code = Code::from_strs(Binary, &["01", "10"]).unwrap();
        let report = check_c4(&code, 2).unwrap();
        assert_eq!(report.total(), 2);
        assert!(report.items().iter().all(|v| v.offset == Some(1)));

        assert!(check_c4(&code, 0).unwrap().is_empty());
    }

    #[test]
    fn c2_c3_examples() {
        let code = Code::from_strs(Dna, &["ACGT"]).unwrap();
        let report = check_c3(&code, 1).unwrap();
        assert_eq!(report.total(), 1); // ACGT is self-reverse-complementary

        let code = Code::from_strs(Dna, &["AA", "CC"]).unwrap();
        assert!(check_c2(&code, 2).unwrap().is_empty());
    }

    #[test]
    fn c4_is_checked_per_direction() {
        // w1=01, w2=11, k4=2. Direction (Y=w1, X=w2): i=1 compares "0" vs
        // "1" (ok), i=2 has H=1 < 2 (violation). Direction (Y=w2, X=w1):
        // i=1 compares "1" vs "1" (violation), i=2 fails too. Three total.
        let code = Code::from_strs(Binary, &["01", "11"]).unwrap();
        let report = check_c4(&code, 2).unwrap();
        assert_eq!(report.total(), 3);
        let hits: Vec<(Witness, Option<usize>)> =
            report.items().iter().map(|v| (v.witness, v.offset)).collect();
        assert_eq!(
            hits,
            [
                (Witness::Pair { y: 1, x: 2 }, Some(2)),
                (Witness::Pair { y: 2, x: 1 }, Some(1)),
                (Witness::Pair { y: 2, x: 1 }, Some(2)),
            ]
        );
    }

    #[test]
    fn c5_shifted_families_catch_violations() {
        // RC("TGA") = "TCA" differs from "ACA" in one position, so both
        // families fail at i=3 with bound 2; the i=2 cases (bound 1) and
        // the opposite direction's i=2 cases all hold.
        let code = Code::from_strs(Dna, &["ACA", "TGA"]).unwrap();
        assert!(check_c5(&code, 1).unwrap().is_empty());
        let report = check_c5(&code, 2).unwrap();
        assert_eq!(report.total(), 4);
        assert!(report.items().iter().all(|v| v.offset == Some(3) && v.measured == 1.0));
        assert_eq!(report.items().iter().filter(|v| v.part == Part::Prefix).count(), 2);
        assert_eq!(report.items().iter().filter(|v| v.part == Part::Suffix).count(), 2);
    }

    #[test]
    fn c6_shifted_families_catch_violations() {
        // "GC" is its own reverse complement: i=2 fails both families at
        // k6=2, while the length-1 pieces at i=1 ("G" vs "C") pass bound 1.
        let code = Code::from_strs(Dna, &["GC"]).unwrap();
        let report = check_c6(&code, 2).unwrap();
        assert_eq!(report.total(), 2);
        assert!(report.items().iter().all(|v| v.offset == Some(2) && v.measured == 0.0));
    }

    #[test]
    fn c5_c6_examples() {
        let code = Code::from_strs(Dna, &["CAA"]).unwrap();
        assert!(check_c6(&code, 1).unwrap().is_empty());

        // a self-RC word fails C6 at i = l
        let code = Code::from_strs(Dna, &["ACGT"]).unwrap();
        let report = check_c6(&code, 1).unwrap();
        assert_eq!(report.total(), 2); // prefix and suffix family coincide at i = l
        assert!(report.items().iter().any(|v| v.part == Part::Prefix));
    }

    #[test]
    fn c7_examples() {
        let code = Code::from_strs(Dna, &["GCAT"]).unwrap();
        assert!(check_c7(&code, 0.5).unwrap().is_empty());
        let code = Code::from_strs(Dna, &["AAAA"]).unwrap();
        assert_eq!(check_c7(&code, 0.5).unwrap().total(), 1);
        let code = Code::from_strs(Dna, &["GGG"]).unwrap();
        assert!(check_c7(&code, 1.0).unwrap().is_empty());
        let binary = Code::from_strs(Binary, &["01"]).unwrap();
        assert!(matches!(check_c7(&binary, 0.5), Err(Error::InvalidAlphabet { .. })));
    }

    #[test]
    fn c8_examples() {
        let code = Code::from_strs(Dna, &["AATT"]).unwrap();
        assert!(check_c8(&code, 2).unwrap().is_empty());
        let code = Code::from_strs(Dna, &["AAAT"]).unwrap();
        let report = check_c8(&code, 2).unwrap();
        assert_eq!(report.total(), 1);
        assert_eq!(report.items()[0].measured, 3.0);
        assert_eq!(report.items()[0].offset, Some(1));
        let code = Code::from_strs(Dna, &["ATAT"]).unwrap();
        assert!(check_c8(&code, 2).unwrap().is_empty());
        assert!(check_c8(&code, 1).is_err());
    }

    #[test]
    fn free_energy_examples() {
        let ones = EnergyTable::uniform(1);
        let w = Word::new(Dna, b"ACGTA").unwrap();
        assert_eq!(free_energy(&w, &ones).unwrap(), 4);

        let mut flat = [0i64; 16];
        flat[0] = 7; // A,A
        flat[3] = 11; // A,T
        let t = EnergyTable::from_flat(flat);
        let w = Word::new(Dna, b"AAT").unwrap();
        assert_eq!(free_energy(&w, &t).unwrap(), 18);

        let g = Word::new(Dna, b"G").unwrap();
        assert_eq!(free_energy(&g, &t).unwrap(), 0);
        assert!(free_energy(&Word::new(Dna, b"").unwrap(), &t).is_err());
    }

    #[test]
    fn c9_examples() {
        // words with FE 5 and 8 under a crafted table
        let mut flat = [0i64; 16];
        flat[0] = 5; // AA -> 5
        flat[5] = 8; // CC -> 8
        let t = EnergyTable::from_flat(flat);
        let code = Code::from_strs(Dna, &["AA", "CC"]).unwrap();
        assert!(check_c9(&code, &t, 3.0).unwrap().is_empty());
        let report = check_c9(&code, &t, 2.0).unwrap();
        assert_eq!(report.total(), 1);
        assert_eq!(report.items()[0].measured, 3.0);

        let single = Code::from_strs(Dna, &["ACGT"]).unwrap();
        assert!(check_c9(&single, &t, 0.0).unwrap().is_empty());
    }

    #[test]
    fn check_all_dispatch() {
        let code = Code::from_strs(Dna, &["AAAT", "CGCG"]).unwrap();
        let mut spec = ConstraintSpec::uniform(1);
        spec.d = 2;
        spec.enabled = ConstraintSet::of(&[ConstraintId::C8]);
        let report = check_all(&code, &spec, None).unwrap();
        assert_eq!(report.total(), 1);
        assert_eq!(report.items()[0].constraint, ConstraintId::C8);

        spec.enabled = ConstraintSet::empty();
        assert!(check_all(&code, &spec, None).unwrap().is_empty());

        spec.enabled = ConstraintSet::of(&[ConstraintId::C9]);
        assert!(check_all(&code, &spec, None).is_err());
    }

    #[test]
    fn report_cap_keeps_total() {
        let words: Vec<&str> = alloc::vec!["AAAA", "AAAT", "AATA", "ATAA", "TAAA"];
        let code = Code::from_strs(Dna, &words).unwrap();
        let mut report = ViolationReport::new(2);
        let sub = check_c1(&code, 4).unwrap();
        assert!(sub.total() > 2);
        report.absorb(sub.clone());
        assert_eq!(report.items().len(), 2);
        assert_eq!(report.total(), sub.total());
    }

    #[test]
    fn energy_table_derived_values() {
        let t = EnergyTable::from_flat([3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3]);
        assert_eq!(t.max(), 9);
        assert_eq!(t.min(), 1);
        assert_eq!(t.spread(), 8);
        assert_eq!(t.get(b'A', b'A'), 3);
        assert_eq!(t.get(b'T', b'G'), 9);
        assert_eq!(t.to_flat()[..4], [3, 1, 4, 1]);
    }
}
