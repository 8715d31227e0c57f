mod common;

use std::cmp::Ordering;

use critbase_core::words::{
    binary, block_lengths, build_block, classify, derived, is_admissible, materialize, successor, AdmissibleSeq,
    BinaryEpw, HSpec, DEFAULT_MAX_DEPTH,
};
use proptest::prelude::*;

#[test]
fn block_examples() {
    assert_eq!(build_block(&[], 0, 1).unwrap().to_string(), "1");
    assert_eq!(build_block(&[2, 2], 2, 1).unwrap().to_string(), "11011010");
    assert_eq!(build_block(&[3, 1], 2, 1).unwrap().to_string(), "1110110");
    assert!(build_block(&[2], 2, 1).is_err());
}

#[test]
fn materialize_examples() {
    let w = materialize(&HSpec::periodic(vec![1]).unwrap()).unwrap();
    assert_eq!(w, binary("", "10").unwrap());
    let w = materialize(&HSpec::periodic(vec![2, 2]).unwrap()).unwrap();
    assert_eq!(w, binary("", "11011010").unwrap());
    let w = materialize(&HSpec::ones_tail(vec![1]).unwrap()).unwrap();
    assert_eq!((w.preperiod(), w.period()), (&[1u8][..], &[0u8][..]));
}

#[test]
fn admissibility_examples() {
    assert!(is_admissible(&binary("", "0").unwrap()));
    assert!(is_admissible(&binary("", "11010").unwrap()));
    assert!(!is_admissible(&binary("", "01").unwrap()));
}

#[test]
fn classify_examples() {
    let c = |pre: &str, per: &str| classify(&binary(pre, per).unwrap(), DEFAULT_MAX_DEPTH).unwrap();
    assert_eq!(c("", "10"), AdmissibleSeq::finite(vec![1]).unwrap());
    assert_eq!(c("", "11011010"), AdmissibleSeq::finite(vec![2, 2]).unwrap());
    assert_eq!(c("1", "0"), AdmissibleSeq::ones_tail(vec![1]).unwrap());
    assert_eq!(c("", "0"), AdmissibleSeq::Zero);
}

#[test]
fn derived_examples() {
    assert_eq!(derived(&AdmissibleSeq::Zero).unwrap(), binary("", "0").unwrap());
    let ten = AdmissibleSeq::finite(vec![1]).unwrap();
    assert_eq!(derived(&ten).unwrap(), binary("", "10").unwrap());
    let d = AdmissibleSeq::finite(vec![2, 2]).unwrap();
    let expected = binary("10", "11011010").unwrap();
    assert_eq!(derived(&d).unwrap(), expected);
    assert_eq!(d.word().unwrap().shift(6), expected);
    assert!(derived(&AdmissibleSeq::finite(vec![]).unwrap()).is_err());
}

#[test]
fn successor_examples() {
    let s = successor(&AdmissibleSeq::finite(vec![1]).unwrap()).unwrap();
    assert_eq!(s, AdmissibleSeq::ones_tail(vec![2]).unwrap());
    assert_eq!(s.word().unwrap(), binary("1", "10").unwrap());
    let s = successor(&AdmissibleSeq::finite(vec![2]).unwrap()).unwrap();
    assert_eq!(s.word().unwrap(), binary("1", "110").unwrap());
    let s = successor(&AdmissibleSeq::finite(vec![3, 1]).unwrap()).unwrap();
    assert_eq!(s.word().unwrap(), binary("1110", "1110110").unwrap());
    assert!(successor(&AdmissibleSeq::finite(vec![]).unwrap()).is_err());
}

#[test]
fn compare_examples() {
    let w = |pre: &str, per: &str| binary(pre, per).unwrap();
    assert_eq!(w("", "10").compare(&w("", "10")), Ordering::Equal);
    assert_eq!(w("", "110").compare(&w("", "10")), Ordering::Greater);
    assert_eq!(w("1", "0").compare(&w("", "10")), Ordering::Less);
}

#[test]
fn recursive_blocks_satisfy_identities_and_suffix_bounds() {
    common::block_properties(3, 4).unwrap();
}

#[test]
fn closed_forms_round_trip_through_classification() {
    common::round_trip(4, 4).unwrap();
}

#[test]
fn derived_sequences_satisfy_shift_bounds() {
    common::derived_properties(3, 4).unwrap();
}

#[test]
fn successor_is_the_next_admissible_word() {
    common::successor_minimality(6, 8).unwrap();
}

#[test]
fn forbidden_windows_are_empty() {
    common::forbidden_windows(3, 3, 4, 8).unwrap();
}

fn word_strategy() -> impl Strategy<Value = BinaryEpw> {
    (prop::collection::vec(0u8..2, 0..6), prop::collection::vec(0u8..2, 1..7))
        .prop_map(|(pre, per)| BinaryEpw::new(pre, per).unwrap())
}

fn h_strategy() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..5, 0..5)
}

proptest! {
    #[test]
    fn block_lengths_follow_the_recursion(h in h_strategy()) {
        let lengths = block_lengths(&h);
        for j in 0..=h.len() {
            let one = build_block(&h, j, 1).unwrap();
            let zero = build_block(&h, j, 0).unwrap();
            prop_assert_eq!(one.len() as u128, lengths[j].0);
            prop_assert_eq!(zero.len() as u128, lengths[j].1);
            if j >= 1 {
                prop_assert_eq!(lengths[j].0, h[j - 1] as u128 * lengths[j - 1].0 + lengths[j - 1].1);
            }
        }
    }

    #[test]
    fn classification_inverts_materialization(h in h_strategy(), ones in any::<bool>()) {
        let spec = if ones && !h.is_empty() { HSpec::ones_tail(h.clone()) } else { HSpec::periodic(h.clone()) }.unwrap();
        let w = materialize(&spec).unwrap();
        prop_assert!(is_admissible(&w));
        let back = classify(&w, DEFAULT_MAX_DEPTH).unwrap();
        prop_assert_eq!(back.word().unwrap(), w);
    }

    #[test]
    fn admissibility_matches_the_shift_definition(w in word_strategy()) {
        let lower = w.shift(1).prepend(&[0]);
        let span = w.preperiod().len() + w.period().len();
        let brute = (0..=span).all(|n| {
            let t = w.shift(n);
            t.compare(&w) != Ordering::Greater && t.compare(&lower) != Ordering::Less
        });
        prop_assert_eq!(is_admissible(&w), brute);
    }

    #[test]
    fn comparison_agrees_with_long_prefixes(u in word_strategy(), v in word_strategy()) {
        let order = u.compare(&v);
        prop_assert_eq!(u.prefix(200).cmp(&v.prefix(200)), order);
        prop_assert_eq!(order == Ordering::Equal, u == v);
    }

    #[test]
    fn normalization_is_canonical(pre in prop::collection::vec(0u8..2, 0..5), per in prop::collection::vec(0u8..2, 1..5), k in 1usize..4) {
        let w = BinaryEpw::new(pre.clone(), per.clone()).unwrap();
        let mut longer_pre = pre.clone();
        longer_pre.extend(per.iter().copied());
        let repeated: Vec<u8> = per.iter().copied().cycle().take(per.len() * k).collect();
        prop_assert_eq!(BinaryEpw::new(longer_pre, repeated).unwrap(), w.clone());
        prop_assert!(w.preperiod().last() != w.period().last() || w.preperiod().is_empty());
    }
}
