//! Property tests for the elementary operations and the exact arithmetic.

use dnaword_core::dyadic::Dyadic;
use dnaword_core::word::{Alphabet, Word};
use proptest::prelude::*;

fn arb_word(alphabet: Alphabet, max_len: usize) -> impl Strategy<Value = Word> {
    let symbols: Vec<u8> = alphabet.symbols().to_vec();
    prop::collection::vec(prop::sample::select(symbols), 0..=max_len)
        .prop_map(move |chars| Word::new(alphabet, chars).unwrap())
}

fn arb_any_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop_oneof![arb_word(Alphabet::Binary, max_len), arb_word(Alphabet::Dna, max_len)]
}

fn arb_word_triple(alphabet: Alphabet) -> impl Strategy<Value = (Word, Word, Word)> {
    let symbols: Vec<u8> = alphabet.symbols().to_vec();
    (1usize..=24).prop_flat_map(move |len| {
        let w = prop::collection::vec(prop::sample::select(symbols.clone()), len)
            .prop_map(move |chars| Word::new(alphabet, chars).unwrap());
        (w.clone(), w.clone(), w)
    })
}

proptest! {
    #[test]
    fn involutions(w in arb_any_word(40)) {
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.complement().complement(), w.clone());
        prop_assert_eq!(w.reverse_complement().reverse_complement(), w.clone());
    }

    #[test]
    fn hamming_is_a_metric((a, b, c) in arb_word_triple(Alphabet::Dna)) {
        let ab = a.hamming(&b).unwrap();
        let ba = b.hamming(&a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert_eq!(a.hamming(&a).unwrap(), 0);
        prop_assert_eq!(ab == 0, a == b);
        let ac = a.hamming(&c).unwrap();
        let cb = c.hamming(&b).unwrap();
        prop_assert!(ab <= ac + cb);
        prop_assert!(ab <= a.len());
    }

    #[test]
    fn complement_preserves_distance((a, b, _) in arb_word_triple(Alphabet::Binary)) {
        prop_assert_eq!(
            a.complement().hamming(&b.complement()).unwrap(),
            a.hamming(&b).unwrap()
        );
    }

    #[test]
    fn dyadic_sum_matches_integer_model(
        terms in prop::collection::vec((0u32..2000, 0u32..24), 1..12)
    ) {
        // compare against u128 arithmetic at a common denominator
        let max_exp = terms.iter().map(|t| t.1).max().unwrap();
        let mut exact: u128 = 0;
        let mut sum = Dyadic::zero();
        for &(num, exp) in &terms {
            exact += (num as u128) << (max_exp - exp);
            sum += &Dyadic::from_ratio(num as u64, exp);
        }
        let expect = Dyadic::from_parts(num_bigint_from_u128(exact), max_exp);
        prop_assert_eq!(sum.clone(), expect);

        // subtracting everything lands exactly on zero
        let mut rest = sum;
        for &(num, exp) in &terms {
            rest = rest.checked_sub(&Dyadic::from_ratio(num as u64, exp)).unwrap();
        }
        prop_assert!(rest.is_zero());
    }

    #[test]
    fn dyadic_comparison_matches_rationals(a in (0u64..5000, 0u32..20), b in (0u64..5000, 0u32..20)) {
        let da = Dyadic::from_ratio(a.0, a.1);
        let db = Dyadic::from_ratio(b.0, b.1);
        // cross-multiplied integer comparison
        let left = (a.0 as u128) << b.1;
        let right = (b.0 as u128) << a.1;
        prop_assert_eq!(da.cmp(&db), left.cmp(&right));
    }
}

fn num_bigint_from_u128(v: u128) -> num_bigint::BigUint {
    num_bigint::BigUint::from(v)
}
