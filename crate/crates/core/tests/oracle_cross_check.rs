//! Randomized cross-validation of the shifting constraint checks against
//! straight-line reference logic written independently in this file
//! (byte loops only, no shared helpers beyond the word accessors).

use dnaword_core::bench::sample_random_code;
use dnaword_core::constraint::{check_c4, check_c5, check_c6};
use dnaword_core::word::{Alphabet, Code};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn comp(c: u8) -> u8 {
    match c {
        b'0' => b'1',
        b'1' => b'0',
        b'A' => b'T',
        b'T' => b'A',
        b'C' => b'G',
        b'G' => b'C',
        _ => unreachable!(),
    }
}

fn rc(s: &[u8]) -> Vec<u8> {
    s.iter().rev().map(|&c| comp(c)).collect()
}

fn dist(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// C4 per definition: every ordered pair, every i with a positive bound.
fn c4_holds(code: &Code, k4: usize) -> bool {
    let ell = code.word_len();
    for y in code.words() {
        for x in code.words() {
            if y == x {
                continue;
            }
            for i in 1..=ell {
                let bound = k4 as i64 - (ell as i64 - i as i64);
                if bound <= 0 {
                    continue;
                }
                if (dist(&y.as_bytes()[..i], &x.as_bytes()[ell - i..]) as i64) < bound {
                    return false;
                }
            }
        }
    }
    true
}

/// C5/C6 per definition: both families, every relevant i. `same` selects
/// the self version.
fn c56_holds(code: &Code, k: usize, same: bool) -> bool {
    let ell = code.word_len();
    for y in code.words() {
        for x in code.words() {
            if same != (y == x) {
                continue;
            }
            for i in 1..=ell {
                let bound = k as i64 - (ell as i64 - i as i64);
                if bound <= 0 {
                    continue;
                }
                let prefix = dist(&y.as_bytes()[..i], &rc(&x.as_bytes()[..i]));
                let suffix = dist(&y.as_bytes()[ell - i..], &rc(&x.as_bytes()[ell - i..]));
                if (prefix as i64) < bound || (suffix as i64) < bound {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn shifting_checks_agree_with_reference_logic() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC405C6);
    let mut checked = 0usize;
    let mut disagreeable = 0usize; // cases where some k fails and some passes
    for trial in 0..60 {
        let n = rng.gen_range(1..=4usize);
        let ell = rng.gen_range(2..=7usize);
        let alphabet = if trial % 2 == 0 { Alphabet::Binary } else { Alphabet::Dna };
        let code = sample_random_code(n, ell, alphabet, rng.gen()).unwrap();

        for k in 0..=ell {
            if n >= 2 {
                assert_eq!(
                    check_c4(&code, k).unwrap().is_empty(),
                    c4_holds(&code, k),
                    "c4 k={k} on {:?}",
                    code.words()
                );
                assert_eq!(
                    check_c5(&code, k).unwrap().is_empty(),
                    c56_holds(&code, k, false),
                    "c5 k={k} on {:?}",
                    code.words()
                );
            }
            let lib = check_c6(&code, k).unwrap().is_empty();
            let reference = c56_holds(&code, k, true);
            assert_eq!(lib, reference, "c6 k={k} on {:?}", code.words());
            if !lib {
                disagreeable += 1;
            }
            checked += 1;
        }
    }
    // the sample must include genuine failures, or the test proves nothing
    assert!(checked > 200);
    assert!(disagreeable > 20, "sample too easy: only {disagreeable} failing cases");
}
