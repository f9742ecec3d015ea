//! Word and code transformations: binary-to-DNA conversions, end padding,
//! run breaking, and GC-content layouts. These are the building blocks the
//! pipelines in [`crate::pipeline`] compose.
//!
//! Every transformation is deterministic and per-word; none of them ever
//! decreases the pairwise distances the constraints care about (padding adds
//! guaranteed disagreements, substitutions are bijective per position class,
//! and run-breaking inserts at input-independent positions).

use alloc::vec::Vec;

use crate::constraint::gc_target;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Code, Word};

fn require_binary_word(w: &Word) -> Result<()> {
    if w.alphabet() != Alphabet::Binary {
        return Err(Error::InvalidAlphabet { expected: Alphabet::Binary, found: w.alphabet() });
    }
    Ok(())
}

fn require_binary(code: &Code) -> Result<()> {
    if code.alphabet() != Alphabet::Binary {
        return Err(Error::InvalidAlphabet { expected: Alphabet::Binary, found: code.alphabet() });
    }
    Ok(())
}

fn map_words(code: &Code, f: impl FnMut(&Word) -> Result<Word>) -> Result<Code> {
    let words = code.words().iter().map(f).collect::<Result<Vec<_>>>()?;
    Code::new(words)
}

/// Position-wise 0 -> A, 1 -> T; Hamming distances are preserved exactly.
pub fn to_dna_at(b: &Word) -> Result<Word> {
    require_binary_word(b)?;
    let chars = b.as_bytes().iter().map(|&c| if c == b'0' { b'A' } else { b'T' }).collect();
    Ok(Word::from_raw(Alphabet::Dna, chars))
}

/// Substitutes bits to DNA with a per-position class: positions in the GC
/// class map 0 -> C / 1 -> G, the rest map 0 -> A / 1 -> T.
fn substitute_by_class(b: &Word, is_gc: impl Fn(usize) -> bool) -> Result<Word> {
    require_binary_word(b)?;
    let chars = b
        .as_bytes()
        .iter()
        .enumerate()
        .map(|(idx, &c)| match (is_gc(idx + 1), c) {
            (true, b'0') => b'C',
            (true, _) => b'G',
            (false, b'0') => b'A',
            (false, _) => b'T',
        })
        .collect();
    Ok(Word::from_raw(Alphabet::Dna, chars))
}

fn pad_binary(w: &Word, left: usize, right: usize, bit: u8) -> Word {
    let mut chars = Vec::with_capacity(w.len() + left + right);
    chars.extend(core::iter::repeat_n(bit, left));
    chars.extend_from_slice(w.as_bytes());
    chars.extend(core::iter::repeat_n(bit, right));
    Word::from_raw(Alphabet::Binary, chars)
}

/// C1..C6 construction: convert to A/T, then prepend
/// `max(k2, k3, k5, k6)` copies of C to every word.
/// Output length is the input length plus that maximum.
pub fn build_c16(b: &Code, k2: usize, k3: usize, k5: usize, k6: usize) -> Result<Code> {
    require_binary(b)?;
    let k = k2.max(k3).max(k5).max(k6);
    map_words(b, |w| {
        let at = to_dna_at(w)?;
        let mut chars = Vec::with_capacity(at.len() + k);
        chars.extend(core::iter::repeat_n(b'C', k));
        chars.extend_from_slice(at.as_bytes());
        Ok(Word::from_raw(Alphabet::Dna, chars))
    })
}

/// `ceil(gamma * l)` evenly distributed 1-based positions:
/// `p_j = floor((j-1) * l / m) + 1`.
pub fn gc_positions(ell: usize, gamma: f64) -> Result<Vec<usize>> {
    if ell == 0 {
        return Err(Error::InvalidParameter { what: "length must be positive" });
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidParameter { what: "gamma must lie in [0, 1]" });
    }
    let m = gc_target(gamma, ell);
    Ok((1..=m).map(|j| (j - 1) * ell / m + 1).collect())
}

/// C1..C7 construction: pad both ends of every word with
/// `max(k2, k3, k5, k6)` ones, then substitute with the GC class on
/// `ceil(gamma * l)` evenly distributed positions.
/// Output length is the input length plus twice that maximum.
pub fn build_c17(
    b: &Code,
    k2: usize,
    k3: usize,
    k5: usize,
    k6: usize,
    gamma: f64,
) -> Result<Code> {
    require_binary(b)?;
    let k = k2.max(k3).max(k5).max(k6);
    let ell = b.word_len() + 2 * k;
    let positions = gc_positions(ell, gamma)?;
    map_words(b, |w| {
        let padded = pad_binary(w, k, k, b'1');
        substitute_by_class(&padded, |p| positions.binary_search(&p).is_ok())
    })
}

/// The fixed geometry of one run-breaking pass on even length `ell`:
/// `u = d - 1` block width, `s = floor(ell / 2u)` insertions per side,
/// `t = s * u` covered positions per side, `mid = ell / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BreakRunsLayout {
    pub u: usize,
    pub s: usize,
    pub t: usize,
    pub mid: usize,
    /// `ell + 2s + 2`.
    pub output_len: usize,
}

pub fn break_runs_layout(ell: usize, d: usize) -> Result<BreakRunsLayout> {
    if d < 2 {
        return Err(Error::InvalidParameter { what: "d must be at least 2" });
    }
    if ell == 0 || !ell.is_multiple_of(2) {
        return Err(Error::InvalidParameter { what: "run breaking needs a positive even length" });
    }
    let u = d - 1;
    let s = ell / (2 * u);
    Ok(BreakRunsLayout { u, s, t: s * u, mid: ell / 2, output_len: ell + 2 * s + 2 })
}

/// 1-based positions in the output that hold inserted characters. These
/// depend only on `(ell, d)`, never on the word, which is what keeps the
/// transformation distance-non-decreasing.
pub fn break_runs_insertion_positions(ell: usize, d: usize) -> Result<Vec<usize>> {
    let lay = break_runs_layout(ell, d)?;
    let mut positions = Vec::with_capacity(2 * lay.s + 2);
    for j in 1..=lay.s {
        positions.push(j * (lay.u + 1));
    }
    positions.push(lay.s + lay.mid + 1);
    positions.push(lay.s + lay.mid + 2);
    for j in (1..=lay.s).rev() {
        positions.push(lay.output_len - j * (lay.u + 1) + 1);
    }
    Ok(positions)
}

/// Breaks long runs in an even-length binary word by inserting a complement
/// character after each width-`d-1` block walking in from both ends, plus a
/// pair in the middle. The output has no run longer than `d` and length
/// `ell + 2*floor(ell / (2(d-1))) + 2`.
///
/// When `2(d-1)` divides `ell` the two sides meet in the middle; the middle
/// pair is then `(x_mid)^c x_mid` instead of `(x_mid)^c (x_mid+1)^c`, which
/// keeps the run bound intact in that case (the literal pair could sit next
/// to the adjacent inserted complements and stack a longer run).
pub fn break_runs(x: &Word, d: usize) -> Result<Word> {
    require_binary_word(x)?;
    let lay = break_runs_layout(x.len(), d)?;
    let bytes = x.as_bytes();
    let comp = |c: u8| Alphabet::Binary.complement(c);
    let mut out = Vec::with_capacity(lay.output_len);

    // left side: after each block x_{(i-1)u+1..iu}, insert (x_iu)^c
    for i in 1..=lay.s {
        out.extend_from_slice(&bytes[(i - 1) * lay.u..i * lay.u]);
        out.push(comp(bytes[i * lay.u - 1]));
    }

    // middle segment with the inserted pair
    if lay.t == lay.mid {
        out.push(comp(bytes[lay.mid - 1]));
        out.push(bytes[lay.mid - 1]);
    } else {
        out.extend_from_slice(&bytes[lay.t..lay.mid]);
        out.push(comp(bytes[lay.mid - 1]));
        out.push(comp(bytes[lay.mid]));
        out.extend_from_slice(&bytes[lay.mid..x.len() - lay.t]);
    }

    // right side, mirrored: before each block x_{l-ju+1..l-(j-1)u}, insert
    // (x_{l-ju+1})^c
    for j in (1..=lay.s).rev() {
        out.push(comp(bytes[x.len() - j * lay.u]));
        out.extend_from_slice(&bytes[x.len() - j * lay.u..x.len() - (j - 1) * lay.u]);
    }

    debug_assert_eq!(out.len(), lay.output_len);
    Ok(Word::from_raw(Alphabet::Binary, out))
}

/// C1,C2,C3,C7,C8 construction from a basic-distance binary code: pad odd
/// lengths with a trailing 0, pad both ends with `max(k2,k3)` ones, break
/// runs, then substitute with evenly distributed GC positions.
pub fn build_c12378(b0: &Code, k2: usize, k3: usize, gamma: f64, d: usize) -> Result<Code> {
    require_binary(b0)?;
    if d < 2 {
        return Err(Error::InvalidParameter { what: "d must be at least 2" });
    }
    let k = k2.max(k3);
    let ell0 = b0.word_len();
    let ell2 = ell0 + (ell0 % 2) + 2 * k;
    let ell3 = break_runs_layout(ell2, d)?.output_len;
    let positions = gc_positions(ell3, gamma)?;
    map_words(b0, |w| {
        let mut padded = w.clone();
        if ell0 % 2 == 1 {
            padded = pad_binary(&padded, 0, 1, b'0');
        }
        let padded = pad_binary(&padded, k, k, b'1');
        let broken = break_runs(&padded, d)?;
        substitute_by_class(&broken, |p| positions.binary_search(&p).is_ok())
    })
}

/// Which class a partition block belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockClass {
    GcRegion,
    AtRegion,
}

/// Partitions `[1, ell]` into consecutive blocks of alternating class, every
/// block size in `[1, d]`, with the GC-class blocks totalling exactly
/// `gc_total` positions. The majority class leads, block sizes are balanced.
pub fn alternating_partition(
    ell: usize,
    gc_total: usize,
    d: usize,
) -> Result<Vec<(BlockClass, usize)>> {
    if d < 2 {
        return Err(Error::InvalidParameter { what: "d must be at least 2" });
    }
    if gc_total > ell {
        return Err(Error::InvalidParameter { what: "GC total exceeds the length" });
    }
    let at_total = ell - gc_total;
    let (lead_total, trail_total, lead_class, trail_class) = if gc_total >= at_total {
        (gc_total, at_total, BlockClass::GcRegion, BlockClass::AtRegion)
    } else {
        (at_total, gc_total, BlockClass::AtRegion, BlockClass::GcRegion)
    };

    if trail_total == 0 {
        if lead_total > d {
            return Err(Error::InvalidParameter { what: "partition infeasible for this gamma band" });
        }
        if lead_total == 0 {
            return Err(Error::InvalidParameter { what: "length must be positive" });
        }
        return Ok(alloc::vec![(lead_class, lead_total)]);
    }

    // block counts: x leading-class, y trailing-class, y in {x-1, x};
    // valid counts for a class run from ceil(total/d) to total
    let x = lead_total.div_ceil(d);
    let mut y = trail_total.div_ceil(d);
    if y + 1 < x {
        y = x - 1;
    }
    if y > trail_total {
        return Err(Error::InvalidParameter { what: "partition infeasible for this gamma band" });
    }

    let balanced = |total: usize, count: usize| -> Vec<usize> {
        // count sizes in {floor, ceil} summing to total, each within [1, d]
        let base = total / count;
        let extra = total % count;
        (0..count).map(|i| base + usize::from(i < extra)).collect()
    };
    let lead_sizes = balanced(lead_total, x);
    let trail_sizes = balanced(trail_total, y);
    debug_assert!(lead_sizes.iter().all(|&s| (1..=d).contains(&s)));
    debug_assert!(trail_sizes.iter().all(|&s| (1..=d).contains(&s)));

    let mut blocks = Vec::with_capacity(x + y);
    for i in 0..x {
        blocks.push((lead_class, lead_sizes[i]));
        if i < y {
            blocks.push((trail_class, trail_sizes[i]));
        }
    }
    debug_assert_eq!(blocks.iter().map(|b| b.1).sum::<usize>(), ell);
    Ok(blocks)
}

/// C1..C8 construction without run breaking (needs
/// `1/(d+1) <= gamma <= d/(d+1)`): pad both ends with
/// `max(k2..k6)` ones, then substitute through an alternating partition
/// whose GC blocks total `ceil(gamma * l)`.
/// Output length is the input length plus twice that maximum.
#[allow(clippy::too_many_arguments)]
pub fn build_c18_direct(
    b: &Code,
    k2: usize,
    k3: usize,
    k4: usize,
    k5: usize,
    k6: usize,
    gamma: f64,
    d: usize,
) -> Result<Code> {
    require_binary(b)?;
    if d < 2 {
        return Err(Error::InvalidParameter { what: "d must be at least 2" });
    }
    let lo = 1.0 / (d as f64 + 1.0);
    let hi = d as f64 / (d as f64 + 1.0);
    if !(gamma >= lo && gamma <= hi) {
        return Err(Error::InvalidParameter { what: "gamma outside [1/(d+1), d/(d+1)]" });
    }
    let k = k2.max(k3).max(k4).max(k5).max(k6);
    let ell = b.word_len() + 2 * k;
    let blocks = alternating_partition(ell, gc_target(gamma, ell), d)?;
    // class lookup by 1-based position
    let mut class = Vec::with_capacity(ell);
    for (c, size) in &blocks {
        class.extend(core::iter::repeat_n(*c == BlockClass::GcRegion, *size));
    }
    map_words(b, |w| {
        let padded = pad_binary(w, k, k, b'1');
        substitute_by_class(&padded, |p| class[p - 1])
    })
}

/// The run-breaking C1..C8 construction (needs `d >= 3`), binary stages:
/// complement-insert after every width-`d-1` sub-word, wrap with `1` / `0`,
/// then append `ceil(k/(d-2))` copies of `1^(d-1) 0` at both ends.
fn c18_runs_binary_stage(w: &Word, d: usize, k: usize) -> Word {
    let u = d - 1;
    let bytes = w.as_bytes();
    let comp = |c: u8| Alphabet::Binary.complement(c);

    // Step 1: per sub-word complement insertion (last sub-word may be short)
    let mut stage = Vec::with_capacity(w.len() + w.len().div_ceil(u));
    for chunk in bytes.chunks(u) {
        stage.extend_from_slice(chunk);
        stage.push(comp(*chunk.last().expect("chunks are non-empty")));
    }

    // Step 2: 1 on the left, 0 on the right
    let mut wrapped = Vec::with_capacity(stage.len() + 2);
    wrapped.push(b'1');
    wrapped.extend_from_slice(&stage);
    wrapped.push(b'0');

    // Step 3: pad both ends with copies of 1^(d-1) 0
    let copies = k.div_ceil(d - 2);
    let mut unit = Vec::with_capacity(d);
    unit.extend(core::iter::repeat_n(b'1', d - 1));
    unit.push(b'0');
    let mut out = Vec::with_capacity(wrapped.len() + 2 * copies * d);
    for _ in 0..copies {
        out.extend_from_slice(&unit);
    }
    out.extend_from_slice(&wrapped);
    for _ in 0..copies {
        out.extend_from_slice(&unit);
    }
    Word::from_raw(Alphabet::Binary, out)
}

/// Exact output length of [`build_c18_runs`] for a given input length.
pub fn c18_runs_length(ell0: usize, k: usize, d: usize) -> Result<usize> {
    if d < 3 {
        return Err(Error::InvalidParameter { what: "d must be at least 3" });
    }
    let ell1 = ell0 + ell0.div_ceil(d - 1);
    let ell2 = ell1 + 2;
    Ok(ell2 + 2 * k.div_ceil(d - 2) * d)
}

/// Picks the run bound `d' <= d` (with `d' >= 3`) minimizing the exact
/// output length. A code with no run longer than `d'` has none longer than
/// `d` either, so building with the stronger bound still satisfies the
/// requested constraint; substituting a weaker bound would not.
pub fn optimize_run_bound(ell0: usize, k: usize, d: usize) -> Result<usize> {
    if d < 3 {
        return Err(Error::InvalidParameter { what: "d must be at least 3" });
    }
    let mut best = d;
    let mut best_len = c18_runs_length(ell0, k, d)?;
    for cand in 3..d {
        let len = c18_runs_length(ell0, k, cand)?;
        if len < best_len {
            best = cand;
            best_len = len;
        }
    }
    Ok(best)
}

/// C1..C8 construction via run breaking (needs `d >= 3`): the binary stages
/// above, then GC substitution on the leftmost `ceil(gamma * l)` characters.
#[allow(clippy::too_many_arguments)]
pub fn build_c18_runs(
    b0: &Code,
    k2: usize,
    k3: usize,
    k4: usize,
    k5: usize,
    k6: usize,
    gamma: f64,
    d: usize,
) -> Result<Code> {
    require_binary(b0)?;
    if d < 3 {
        return Err(Error::InvalidParameter { what: "d must be at least 3" });
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidParameter { what: "gamma must lie in [0, 1]" });
    }
    let k = k2.max(k3).max(k4).max(k5).max(k6);
    let ell3 = c18_runs_length(b0.word_len(), k, d)?;
    let gc_region = gc_target(gamma, ell3);
    map_words(b0, |w| {
        let binary = c18_runs_binary_stage(w, d, k);
        debug_assert_eq!(binary.len(), ell3);
        substitute_by_class(&binary, |p| p <= gc_region)
    })
}
