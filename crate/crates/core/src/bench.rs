//! Rejection-sampling baseline: uniformly random codes checked against the
//! oracle, for length comparison against the deterministic constructions.
//!
//! This is deliberately naive sampling, not a reimplementation of any prior
//! randomized construction. Randomness comes from ChaCha8 seeded with a
//! caller-supplied 64-bit value; per-length sampling uses the length as the
//! ChaCha stream id, so results are reproducible across platforms and
//! independent across lengths.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constraint::{check_all, ConstraintSpec, EnergyTable};
use crate::error::{Error, Result};
use crate::pipeline::Pipeline;
use crate::word::{Alphabet, Code, Word};

fn distinct_words_exist(n: usize, ell: usize, alphabet: Alphabet) -> bool {
    // |alphabet|^ell >= n without overflow
    let base = alphabet.size() as u128;
    let mut space: u128 = 1;
    for _ in 0..ell {
        space = space.saturating_mul(base);
        if space >= n as u128 {
            return true;
        }
    }
    space >= n as u128
}

fn sample_word(rng: &mut impl Rng, ell: usize, alphabet: Alphabet) -> Word {
    let symbols = alphabet.symbols();
    let chars: Vec<u8> = (0..ell).map(|_| symbols[rng.gen_range(0..symbols.len())]).collect();
    Word::new(alphabet, chars).expect("sampled from the alphabet")
}

fn sample_code_with(rng: &mut impl Rng, n: usize, ell: usize, alphabet: Alphabet) -> Code {
    let mut seen = BTreeSet::new();
    let mut words = Vec::with_capacity(n);
    while words.len() < n {
        let w = sample_word(rng, ell, alphabet);
        if seen.insert(w.as_bytes().to_vec()) {
            words.push(w);
        }
        // collisions are simply resampled; termination is guaranteed because
        // the space was checked to hold n distinct words
    }
    Code::new(words).expect("distinct by construction")
}

/// `n` distinct uniform words of length `ell`, deterministically from `seed`.
pub fn sample_random_code(n: usize, ell: usize, alphabet: Alphabet, seed: u64) -> Result<Code> {
    if n == 0 {
        return Err(Error::InvalidParameter { what: "need at least one word" });
    }
    if ell == 0 && n > 1 {
        return Err(Error::InvalidParameter { what: "too few distinct words at this length" });
    }
    if !distinct_words_exist(n, ell, alphabet) {
        return Err(Error::InvalidParameter { what: "too few distinct words at this length" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_code_with(&mut rng, n, ell, alphabet))
}

/// Smallest length in `[min_len, max_len]` at which at least half of
/// `trials` sampled random codes pass the pipeline's constraint set;
/// `None` if no length in the range reaches that rate.
pub fn baseline_length(
    n: usize,
    spec: &ConstraintSpec,
    pipeline: Pipeline,
    table: Option<&EnergyTable>,
    trials: usize,
    seed: u64,
    max_len: usize,
) -> Result<Option<usize>> {
    if trials == 0 {
        return Err(Error::InvalidParameter { what: "need at least one trial" });
    }
    let alphabet = pipeline.alphabet();
    let mut check_spec = spec.clone();
    check_spec.enabled = pipeline.checked_constraints();

    // the checks need every enabled k to fit the word length, and
    // distinctness needs enough words at this length
    let k_floor =
        [spec.k1, spec.k2, spec.k3, spec.k4, spec.k5, spec.k6].into_iter().max().unwrap_or(0);
    let mut min_len = k_floor.max(1);
    while !distinct_words_exist(n, min_len, alphabet) {
        min_len += 1;
    }

    for ell in min_len..=max_len {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(ell as u64);
        let mut successes = 0usize;
        for _ in 0..trials {
            let code = sample_code_with(&mut rng, n, ell, alphabet);
            if check_all(&code, &check_spec, table)?.is_empty() {
                successes += 1;
            }
        }
        if 2 * successes >= trials {
            return Ok(Some(ell));
        }
    }
    Ok(None)
}
