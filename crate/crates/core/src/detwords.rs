//! The greedy conditional-expectation derandomizer.
//!
//! Starting from an all-unknown n x l matrix whose blank potential strictly
//! exceeds `slots - 1` (the mandatory base case), cells are fixed one at a
//! time. For each cell the potential is evaluated with the cell set to 0
//! (recomputing only the instances that touch the mutated row) and the
//! 1-branch is obtained from the linearity identity
//! `2 * E(M) = E(M0) + E(M1)`; the larger branch wins, ties go to 0. Exact
//! dyadic arithmetic keeps the loop invariant `E(M) > slots - 1` watertight,
//! so the finished matrix satisfies every instance and its rows form a code
//! meeting the distance constraints.
//!
//! Every successful run re-verifies its output against the constraint
//! oracle before returning.

use alloc::vec::Vec;

use crate::constraint::{check_c1, check_c4};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::expectation::{blank_deficit, slot_count, Cell, PartialMatrix};
use crate::word::Code;

/// Cell visiting order. Correctness does not depend on it; output does.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FillOrder {
    /// Position 1 of every word, then position 2, ... (the default).
    #[default]
    ColumnMajor,
    /// Word 1 left to right, then word 2, ...
    RowMajor,
}

#[derive(Clone, Debug, Default)]
pub struct DetWordsOptions {
    pub fill_order: FillOrder,
    /// Record one [`AssignmentStep`] per cell (exact expectations included).
    pub record_trace: bool,
}

/// One greedy step: the cell, both branch expectations, the chosen bit and
/// the exact potential after committing it.
#[derive(Clone, Debug)]
pub struct AssignmentStep {
    pub row: usize,
    pub col: usize,
    pub chosen: bool,
    pub expect_zero: Dyadic,
    pub expect_one: Dyadic,
    pub expectation_after: Dyadic,
}

/// A fully assigned matrix whose rows satisfy the requested constraints.
#[derive(Clone, Debug)]
pub struct DistanceMatrixResult {
    /// The rows as a binary code.
    pub code: Code,
    /// Exact final potential; always equals `slots`.
    pub final_expectation: Dyadic,
    pub slots: u64,
    pub trace: Option<Vec<AssignmentStep>>,
}

/// Runs the derandomizer for the basic constraint with parameter `k1` and
/// the shifting constraint with parameter `k4`.
///
/// Fails with [`Error::InfeasibleLength`] when the base case does not hold
/// at this `ell`; no unverified code is ever emitted.
pub fn det_words(n: usize, ell: usize, k1: usize, k4: usize) -> Result<DistanceMatrixResult> {
    det_words_with(n, ell, k1, k4, &DetWordsOptions::default())
}

pub fn det_words_with(
    n: usize,
    ell: usize,
    k1: usize,
    k4: usize,
    options: &DetWordsOptions,
) -> Result<DistanceMatrixResult> {
    Engine::new(n, ell, k1, k4)?.run(options)
}

/// The simplified scheme that satisfies only the basic constraint: the
/// potential keeps just the basic term (`k = k1`, `slots = C(n,2)`).
pub fn det_words_hamming_only(n: usize, ell: usize, k1: usize) -> Result<DistanceMatrixResult> {
    det_words_hamming_only_with(n, ell, k1, &DetWordsOptions::default())
}

pub fn det_words_hamming_only_with(
    n: usize,
    ell: usize,
    k1: usize,
    options: &DetWordsOptions,
) -> Result<DistanceMatrixResult> {
    if k1 == 0 {
        return Err(Error::InvalidParameter { what: "k1 must be at least 1" });
    }
    Engine::new(n, ell, k1, 0)?.run(options)
}

/// Greedy state: the matrix, one cached failure probability per constraint
/// instance, and their exact running sum (`potential = slots - fail_sum`).
struct Engine {
    n: usize,
    ell: usize,
    k: usize,
    k4: usize,
    slots: u64,
    matrix: PartialMatrix,
    /// Per unordered pair (a < b), `stride` probabilities: the basic
    /// instance, then per shift case both ordered directions (Y=a then Y=b).
    cache: Vec<Dyadic>,
    stride: usize,
    fail_sum: Dyadic,
}

impl Engine {
    fn new(n: usize, ell: usize, k1: usize, k4: usize) -> Result<Engine> {
        if n < 2 {
            return Err(Error::InvalidParameter { what: "need at least two words" });
        }
        if k1.max(k4) == 0 {
            return Err(Error::InvalidParameter { what: "max(k1, k4) must be at least 1" });
        }
        if ell == 0 {
            return Err(Error::InvalidParameter { what: "word length must be positive" });
        }
        // Mandatory base case: refuse to run rather than emit an unverified code.
        let deficit = blank_deficit(n, ell, k1, k4)?;
        if deficit >= Dyadic::one() {
            return Err(Error::InfeasibleLength { ell });
        }

        let k = k1.max(k4);
        let shift_cases = k4.saturating_sub(1);
        let stride = 1 + 2 * shift_cases;
        let pairs = n * (n - 1) / 2;
        let matrix = PartialMatrix::blank(n, ell)?;

        let mut engine = Engine {
            n,
            ell,
            k,
            k4,
            slots: slot_count(n, k4),
            matrix,
            cache: Vec::with_capacity(pairs * stride),
            stride,
            fail_sum: Dyadic::zero(),
        };

        // All pairs look identical on the blank matrix; fill the cache from
        // one prototype pair.
        let mut prototype = Vec::with_capacity(stride);
        prototype.push(engine.prob_basic(0, 1));
        for case in 0..shift_cases {
            let i = engine.case_shift(case);
            prototype.push(engine.prob_shift(0, 1, i));
            prototype.push(engine.prob_shift(1, 0, i));
        }
        let mut fail_sum = Dyadic::zero();
        for _ in 0..pairs {
            for p in &prototype {
                fail_sum += p;
                engine.cache.push(p.clone());
            }
        }
        engine.fail_sum = fail_sum;
        debug_assert!(engine.fail_sum < Dyadic::one());
        Ok(engine)
    }

    /// Shift case index -> the case's `i` (may be <= 0 when ell < k4).
    fn case_shift(&self, case: usize) -> i64 {
        self.ell as i64 - self.k4 as i64 + 1 + case as i64
    }

    fn pair_index(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        (a * (2 * self.n - a - 1)) / 2 + (b - a - 1)
    }

    fn prob_basic(&self, a: usize, b: usize) -> Dyadic {
        crate::expectation::pair_fail_prob_c1(self.matrix.row(a), self.matrix.row(b), self.k)
            .expect("rows share a length")
    }

    fn prob_shift(&self, y: usize, x: usize, i: i64) -> Dyadic {
        shifted_prob(self.matrix.row(y), self.matrix.row(x), self.k4, i)
    }

    /// Recomputes every cached instance involving `row` under the current
    /// matrix; returns (per-slot values in cache order, their sum).
    fn recompute_row(&self, row: usize) -> (Vec<(usize, Dyadic)>, Dyadic) {
        let mut slots = Vec::with_capacity((self.n - 1) * self.stride);
        let mut sum = Dyadic::zero();
        for other in 0..self.n {
            if other == row {
                continue;
            }
            let (a, b) = if row < other { (row, other) } else { (other, row) };
            let base = self.pair_index(a, b) * self.stride;
            let p = self.prob_basic(a, b);
            sum += &p;
            slots.push((base, p));
            for case in 0..self.k4.saturating_sub(1) {
                let i = self.case_shift(case);
                let p = self.prob_shift(a, b, i);
                sum += &p;
                slots.push((base + 1 + 2 * case, p));
                let p = self.prob_shift(b, a, i);
                sum += &p;
                slots.push((base + 2 + 2 * case, p));
            }
        }
        (slots, sum)
    }

    fn cached_row_sum(&self, row: usize) -> Dyadic {
        let mut sum = Dyadic::zero();
        for other in 0..self.n {
            if other == row {
                continue;
            }
            let (a, b) = if row < other { (row, other) } else { (other, row) };
            let base = self.pair_index(a, b) * self.stride;
            for s in 0..self.stride {
                sum += &self.cache[base + s];
            }
        }
        sum
    }

    fn run(mut self, options: &DetWordsOptions) -> Result<DistanceMatrixResult> {
        let mut trace = options.record_trace.then(Vec::new);
        let cells: Vec<(usize, usize)> = match options.fill_order {
            FillOrder::ColumnMajor => (0..self.ell)
                .flat_map(|c| (0..self.n).map(move |r| (r, c)))
                .collect(),
            FillOrder::RowMajor => (0..self.n)
                .flat_map(|r| (0..self.ell).map(move |c| (r, c)))
                .collect(),
        };

        let slots_dyadic = Dyadic::from_int(self.slots);
        for (row, col) in cells {
            let before = self.cached_row_sum(row);
            let rest = self.fail_sum.checked_sub(&before).expect("subset of the sum");

            self.matrix.set_raw(row, col, Cell::Zero);
            let (slots0, sum0) = self.recompute_row(row);
            let fail0 = &rest + &sum0;
            // linearity: fail(M) = (fail(M0) + fail(M1)) / 2
            let fail1 = self
                .fail_sum
                .double()
                .checked_sub(&fail0)
                .expect("linearity keeps both branches non-negative");

            // E0 >= E1  <=>  fail0 <= fail1; ties choose 0
            let choose_zero = fail0 <= fail1;
            let committed = if choose_zero {
                for (idx, p) in slots0 {
                    self.cache[idx] = p;
                }
                self.fail_sum = fail0.clone();
                false
            } else {
                self.matrix.set_raw(row, col, Cell::One);
                let (slots1, sum1) = self.recompute_row(row);
                let direct = &rest + &sum1;
                debug_assert_eq!(direct, fail1, "linearity identity must be exact");
                for (idx, p) in slots1 {
                    self.cache[idx] = p;
                }
                self.fail_sum = direct;
                true
            };

            // loop invariant: the potential stays strictly above slots - 1
            debug_assert!(self.fail_sum < Dyadic::one());

            if let Some(t) = trace.as_mut() {
                t.push(AssignmentStep {
                    row,
                    col,
                    chosen: committed,
                    expect_zero: slots_dyadic.checked_sub(&fail0).expect("fail mass below slots"),
                    expect_one: slots_dyadic.checked_sub(&fail1).expect("fail mass below slots"),
                    expectation_after: slots_dyadic
                        .checked_sub(&self.fail_sum)
                        .expect("fail mass below slots"),
                });
            }
        }

        if !self.fail_sum.is_zero() {
            return Err(Error::VerificationFailed {
                constraint: crate::constraint::ConstraintId::C1,
                total: 1,
            });
        }

        let code = self.matrix.to_code()?;
        verify_output(&code, self.k, self.k4)?;
        Ok(DistanceMatrixResult {
            code,
            final_expectation: slots_dyadic,
            slots: self.slots,
            trace,
        })
    }
}

fn shifted_prob(y: &[Cell], x: &[Cell], k4: usize, i: i64) -> Dyadic {
    if i >= 1 {
        crate::expectation::pair_fail_prob_c4(y, x, k4, i as usize).expect("case in range")
    } else {
        // degenerate case (ell < k4): empty alignment, always fails
        Dyadic::one()
    }
}

/// Unconditional post-run check against the definition-level oracle. The
/// basic constraint is checked at `k = max(k1, k4)`, which subsumes both
/// `k1` and the `i = l` case.
fn verify_output(code: &Code, k: usize, k4: usize) -> Result<()> {
    let basic = check_c1(code, k)?;
    if !basic.is_empty() {
        return Err(Error::VerificationFailed {
            constraint: basic.items()[0].constraint,
            total: basic.total(),
        });
    }
    if k4 >= 1 {
        let shifted = check_c4(code, k4)?;
        if !shifted.is_empty() {
            return Err(Error::VerificationFailed {
                constraint: shifted.items()[0].constraint,
                total: shifted.total(),
            });
        }
    }
    Ok(())
}
