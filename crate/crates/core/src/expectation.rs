//! Exact computation of the derandomization potential.
//!
//! A partially assigned n x l binary matrix M is read as a random variable:
//! every unknown cell is an independent fair bit. The potential counts, in
//! expectation, how many of the `C(n,2) * (1 + 2*(k4-1))` constraint
//! instances hold:
//!
//! * one basic-distance instance per unordered row pair, with parameter
//!   `k = max(k1, k4)`, and
//! * for each shift case `i` in `[l-k4+1, l-1]`, one instance per ordered
//!   row pair, comparing Y's length-i prefix with X's length-i suffix
//!   against the bound `k4 - (l-i)`.
//!
//! Each instance fails with probability `sum_{j=0}^{b-1-t} C(m,j) / 2^m`,
//! where over the aligned positions `t` counts known disagreements and `m`
//! counts positions touching at least one unknown cell (`b` is the bound).
//! Every aligned slot with an unknown disagrees with probability exactly
//! 1/2, independently, which is what makes the binomial tail exact.
//!
//! Everything here is exact dyadic arithmetic; see [`crate::dyadic`].
//!
//! `k4 = 0` is accepted and means "no shifting constraint at all": no shift
//! terms, `slots = C(n,2)`, and the basic term uses `k = k1`. `k4 = 1`
//! contributes no shift cases either but is otherwise the literal formula.
//! Lengths smaller than `max(k1, k4)` are accepted: shift cases whose
//! alignment cannot reach their bound count as always-failing slots, so the
//! threshold test is simply false at such lengths.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::word::{Code, Word};

/// One cell of a partially assigned matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Zero,
    One,
    Unknown,
}

impl Cell {
    pub fn is_known(self) -> bool {
        self != Cell::Unknown
    }

    fn bit(self) -> Option<bool> {
        match self {
            Cell::Zero => Some(false),
            Cell::One => Some(true),
            Cell::Unknown => None,
        }
    }
}

/// An n x l grid of {0, 1, unknown}; the derandomization state.
///
/// Entries only ever move from unknown to a bit, never back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl PartialMatrix {
    pub fn blank(rows: usize, cols: usize) -> Result<PartialMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter { what: "matrix dimensions must be positive" });
        }
        Ok(PartialMatrix { rows, cols, cells: alloc::vec![Cell::Unknown; rows * cols] })
    }

    /// Parses rows of '0' / '1' / '?' characters; rows must share a length.
    pub fn from_rows(rows: &[&str]) -> Result<PartialMatrix> {
        let n = rows.len();
        let ell = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = PartialMatrix::blank(n, ell)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ell {
                return Err(Error::LengthMismatch { left: ell, right: row.len() });
            }
            for (c, ch) in row.bytes().enumerate() {
                m.cells[r * ell + c] = match ch {
                    b'0' => Cell::Zero,
                    b'1' => Cell::One,
                    b'?' => Cell::Unknown,
                    _ => return Err(Error::InvalidParameter { what: "matrix rows use 0, 1, ?" }),
                };
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.rows
    }

    pub fn ell(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Cell] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    /// Fills an unknown cell; refuses to overwrite a known one.
    pub fn assign(&mut self, row: usize, col: usize, bit: bool) -> Result<()> {
        let cell = &mut self.cells[row * self.cols + col];
        if cell.is_known() {
            return Err(Error::InvalidParameter { what: "cell is already assigned" });
        }
        *cell = if bit { Cell::One } else { Cell::Zero };
        Ok(())
    }

    pub(crate) fn set_raw(&mut self, row: usize, col: usize, cell: Cell) {
        self.cells[row * self.cols + col] = cell;
    }

    pub fn unknown_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.is_known()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.unknown_count() == 0
    }

    /// The rows of a fully assigned matrix as a binary code.
    pub fn to_code(&self) -> Result<Code> {
        let mut words = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let bits = self
                .row(r)
                .iter()
                .map(|c| c.bit().ok_or(Error::InvalidParameter { what: "matrix still has unknowns" }))
                .collect::<Result<Vec<bool>>>()?;
            words.push(Word::from_bits(&bits));
        }
        Code::new(words)
    }

    /// One fully assigned row as a binary word.
    pub fn word(&self, row: usize) -> Result<Word> {
        let bits = self
            .row(row)
            .iter()
            .map(|c| c.bit().ok_or(Error::InvalidParameter { what: "row still has unknowns" }))
            .collect::<Result<Vec<bool>>>()?;
        Ok(Word::from_bits(&bits))
    }
}

/// Alignment summary for one constraint instance: `known` positions where
/// both cells carry bits, of which `differing` disagree, plus `open`
/// positions touching at least one unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairProfile {
    pub known: usize,
    pub differing: usize,
    pub open: usize,
}

impl PairProfile {
    fn record(&mut self, a: Cell, b: Cell) {
        match (a.bit(), b.bit()) {
            (Some(x), Some(y)) => {
                self.known += 1;
                if x != y {
                    self.differing += 1;
                }
            }
            _ => self.open += 1,
        }
    }
}

/// Profile of two full rows aligned position by position.
pub fn profile_full(y: &[Cell], x: &[Cell]) -> PairProfile {
    debug_assert_eq!(y.len(), x.len());
    let mut p = PairProfile { known: 0, differing: 0, open: 0 };
    for (&a, &b) in y.iter().zip(x) {
        p.record(a, b);
    }
    p
}

/// Profile of Y's length-i prefix against X's length-i suffix.
pub fn profile_shifted(y: &[Cell], x: &[Cell], i: usize) -> PairProfile {
    debug_assert_eq!(y.len(), x.len());
    debug_assert!(i <= y.len());
    let ell = y.len();
    let mut p = PairProfile { known: 0, differing: 0, open: 0 };
    for j in 0..i {
        p.record(y[j], x[ell - i + j]);
    }
    p
}

/// `C(n, k)` by incremental multiplication in arbitrary precision.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// `P(t + Binomial(open, 1/2) <= bound - 1)` as an exact dyadic: the failure
/// probability of one instance with profile (known, differing=t, open).
fn tail_prob(open: usize, differing: usize, bound: i64) -> Dyadic {
    let budget = bound - 1 - differing as i64;
    if budget < 0 {
        return Dyadic::zero();
    }
    if budget as usize >= open {
        return Dyadic::one();
    }
    let mut sum = BigUint::ZERO;
    let mut coeff = BigUint::one();
    for j in 0..=budget as usize {
        if j > 0 {
            coeff = coeff * BigUint::from(open + 1 - j) / BigUint::from(j);
        }
        sum += &coeff;
    }
    Dyadic::from_parts(sum, open as u32)
}

/// Probability, under an independent uniform fill of the unknowns, that two
/// rows end up at Hamming distance at most `k - 1` (the failure of the basic
/// distance instance).
pub fn pair_fail_prob_c1(y: &[Cell], x: &[Cell], k: usize) -> Result<Dyadic> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch { left: y.len(), right: x.len() });
    }
    let p = profile_full(y, x);
    Ok(tail_prob(p.open, p.differing, k as i64))
}

/// Probability that shift case `i` fails: Y's length-i prefix against X's
/// length-i suffix ends below the bound `k4 - (l-i)`. Requires
/// `l - k4 + 1 <= i <= l - 1` (and `i >= 1`).
pub fn pair_fail_prob_c4(y: &[Cell], x: &[Cell], k4: usize, i: usize) -> Result<Dyadic> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch { left: y.len(), right: x.len() });
    }
    let ell = y.len();
    let lo = (ell as i64) - (k4 as i64) + 1;
    if (i as i64) < lo.max(1) || i + 1 > ell {
        return Err(Error::InvalidParameter { what: "shift case i out of range" });
    }
    Ok(shifted_fail_prob(y, x, k4, i as i64))
}

/// Internal variant that also accepts degenerate cases `i <= 0` (possible
/// when `l < k4`): an empty alignment against a positive bound always fails.
fn shifted_fail_prob(y: &[Cell], x: &[Cell], k4: usize, i: i64) -> Dyadic {
    let ell = y.len() as i64;
    let bound = k4 as i64 - (ell - i);
    if i <= 0 {
        return if bound >= 1 { Dyadic::one() } else { Dyadic::zero() };
    }
    let p = profile_shifted(y, x, i as usize);
    tail_prob(p.open, p.differing, bound)
}

/// The potential split into its basic term and one term per shift case.
#[derive(Clone, Debug)]
pub struct ExpectationBreakdown {
    /// Expected satisfied basic instances over unordered pairs, with
    /// parameter `max(k1, k4)`.
    pub e1_term: Dyadic,
    /// One term per shift case `i = l-k4+1 .. l-1` (ascending), each summing
    /// both ordered directions over all pairs.
    pub e4_terms: Vec<Dyadic>,
    /// `e1_term` plus all shift terms.
    pub total: Dyadic,
    /// `C(n,2) * (1 + 2*(k4-1))`, the number of counted instances.
    pub slots: u64,
}

/// `C(n,2) * (1 + 2*(k4-1))`; `k4 <= 1` contributes no shift instances.
pub fn slot_count(n: usize, k4: usize) -> u64 {
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    pairs * (1 + 2 * (k4 as u64).saturating_sub(1))
}

fn validate_params(n: usize, k1: usize, k4: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter { what: "need at least two words" });
    }
    if k1.max(k4) == 0 {
        return Err(Error::InvalidParameter { what: "max(k1, k4) must be at least 1" });
    }
    Ok(())
}

/// The exact potential of a partial matrix.
pub fn approx_expectation(m: &PartialMatrix, k1: usize, k4: usize) -> Result<ExpectationBreakdown> {
    validate_params(m.n(), k1, k4)?;
    let n = m.n();
    let ell = m.ell();
    let k = k1.max(k4);
    let pairs = (n as u64) * (n as u64 - 1) / 2;

    let mut fail_e1 = Dyadic::zero();
    for a in 0..n {
        for b in a + 1..n {
            fail_e1 += &pair_fail_prob_c1(m.row(a), m.row(b), k)?;
        }
    }
    let e1_term = Dyadic::from_int(pairs).checked_sub(&fail_e1).expect("probabilities at most 1");

    let mut e4_terms = Vec::new();
    let mut total = e1_term.clone();
    if k4 >= 2 {
        for i in (ell as i64 - k4 as i64 + 1)..=(ell as i64 - 1) {
            let mut fail_i = Dyadic::zero();
            for a in 0..n {
                for b in a + 1..n {
                    fail_i += &shifted_fail_prob(m.row(a), m.row(b), k4, i);
                    fail_i += &shifted_fail_prob(m.row(b), m.row(a), k4, i);
                }
            }
            let term = Dyadic::from_int(2 * pairs).checked_sub(&fail_i).expect("probabilities at most 1");
            total += &term;
            e4_terms.push(term);
        }
    }

    Ok(ExpectationBreakdown { e1_term, e4_terms, total, slots: slot_count(n, k4) })
}

/// The total failure mass of the all-unknown matrix, computed without
/// materializing it:
/// `C(n,2) * (sum_{j<k} C(l,j) 2^-l + 2 * sum_i sum_{j<k4-(l-i)} C(i,j) 2^-i)`.
pub(crate) fn blank_deficit(n: usize, ell: usize, k1: usize, k4: usize) -> Result<Dyadic> {
    validate_params(n, k1, k4)?;
    if ell == 0 {
        return Err(Error::InvalidParameter { what: "word length must be positive" });
    }
    let k = k1.max(k4);
    let pairs = (n as u64) * (n as u64 - 1) / 2;

    let mut deficit = tail_prob(ell, 0, k as i64);
    if k4 >= 2 {
        for i in (ell as i64 - k4 as i64 + 1)..=(ell as i64 - 1) {
            let bound = k4 as i64 - (ell as i64 - i);
            let fail = if i <= 0 {
                if bound >= 1 {
                    Dyadic::one()
                } else {
                    Dyadic::zero()
                }
            } else {
                tail_prob(i as usize, 0, bound)
            };
            deficit += &fail.double();
        }
    }
    Ok(deficit.scale(pairs))
}

/// Closed form of the potential on the all-unknown n x l matrix; agrees
/// exactly with `approx_expectation` on a blank matrix.
pub fn blank_expectation(n: usize, ell: usize, k1: usize, k4: usize) -> Result<Dyadic> {
    let deficit = blank_deficit(n, ell, k1, k4)?;
    Dyadic::from_int(slot_count(n, k4))
        .checked_sub(&deficit)
        .ok_or(Error::InvalidParameter { what: "deficit exceeded slots" })
}

/// True iff the blank potential strictly exceeds `slots - 1` (exact
/// comparison): the base case that guarantees the greedy fill succeeds.
pub fn exceeds_threshold(n: usize, ell: usize, k1: usize, k4: usize) -> Result<bool> {
    Ok(blank_deficit(n, ell, k1, k4)? < Dyadic::one())
}

/// `exceeds_threshold` for the basic-constraint-only potential
/// (`slots = C(n,2)`, no shift terms).
pub fn exceeds_threshold_hamming_only(n: usize, ell: usize, k1: usize) -> Result<bool> {
    if k1 == 0 {
        return Err(Error::InvalidParameter { what: "k1 must be at least 1" });
    }
    Ok(blank_deficit(n, ell, k1, 0)? < Dyadic::one())
}
