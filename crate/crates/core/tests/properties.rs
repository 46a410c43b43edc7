use commclass_core::repr::{heap_of_word, linear_extension_count, representation_roundtrip, wiring_diagram};
use commclass_core::{
    apply_braid, canonicalize, commutation_class_of, count_commutation_classes, count_reduced_words, is_canonical,
    partition_reduced_words, BigCount, Permutation, Word, DEFAULT_ORACLE_BUDGET,
};
use proptest::prelude::*;

/// A random reduced word: walk down from a random permutation, taking one
/// left descent at a time.
fn reduced_word() -> impl Strategy<Value = Word> {
    (2usize..=8).prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), any::<u64>())).prop_map(
        |(n, images, seed)| {
            let mut w = Permutation::from_one_line(&images).unwrap();
            let mut letters = Vec::new();
            let mut state = seed;
            while !w.is_identity() {
                let d = w.left_descents();
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let i = d[(state >> 33) as usize % d.len()];
                letters.push(i as u8);
                w = w.left_mul_generator(i).unwrap();
            }
            Word::new(n, letters).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn words_are_reduced(word in reduced_word()) {
        prop_assert!(word.is_reduced());
        prop_assert_eq!(word.len(), word.evaluate().length());
    }

    #[test]
    fn canonical_form_is_least_member(word in reduced_word()) {
        prop_assume!(word.len() <= 14);
        let class = commutation_class_of(&word).unwrap();
        let canon = canonicalize(&word);
        prop_assert_eq!(class.first(), Some(&canon));
        prop_assert!(is_canonical(&canon));
        prop_assert_eq!(class.iter().filter(|w| is_canonical(w)).count(), 1);
        prop_assert_eq!(canonicalize(&canon), canon);
    }

    #[test]
    fn class_size_is_extension_count(word in reduced_word()) {
        prop_assume!(word.len() <= 14);
        let class = commutation_class_of(&word).unwrap();
        prop_assert_eq!(linear_extension_count(&heap_of_word(&word)), BigCount::from(class.len()));
    }

    #[test]
    fn representations_are_class_invariants(word in reduced_word()) {
        prop_assume!(word.len() <= 12);
        let heap = heap_of_word(&word);
        let layout = wiring_diagram(&word).layout();
        for member in commutation_class_of(&word).unwrap() {
            prop_assert!(heap_of_word(&member).is_isomorphic(&heap));
            prop_assert_eq!(wiring_diagram(&member).layout(), layout.clone());
            prop_assert_eq!(member.evaluate(), word.evaluate());
        }
        prop_assert_eq!(representation_roundtrip(&heap), canonicalize(&word));
    }

    #[test]
    fn braid_moves_preserve_the_element(word in reduced_word()) {
        for pos in 1..=word.len().saturating_sub(2) {
            if let Ok(moved) = apply_braid(&word, pos) {
                prop_assert!(moved.is_reduced());
                prop_assert_eq!(moved.evaluate(), word.evaluate());
                prop_assert_ne!(canonicalize(&moved), canonicalize(&word));
            }
        }
    }
}

#[test]
fn random_permutations_of_rank_six_agree_with_oracle() {
    let mut images: Vec<usize> = (1..=6).collect();
    // Deterministic sweep through a few dozen rank-6 permutations.
    for step in 0..40 {
        images.rotate_left(step % 5 + 1);
        images.swap(step % 6, (step * 7 + 3) % 6);
        let w = Permutation::from_one_line(&images).unwrap();
        let oracle = partition_reduced_words(&w, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(count_commutation_classes(&w).unwrap(), BigCount::from(oracle.len()), "{w}");
        let total: usize = oracle.iter().map(|c| c.len()).sum();
        assert_eq!(count_reduced_words(&w), BigCount::from(total), "{w}");
    }
}

#[test]
fn wide_ranks_use_comma_words() {
    let w = Permutation::longest(12).unwrap();
    assert_eq!(w.length(), 66);
    let word = Word::parse("11,10,1", 12).unwrap();
    assert_eq!(word.to_string(), "11,10,1");
    assert_eq!(canonicalize(&word).to_string(), "1,11,10");
    assert_eq!(commutation_class_of(&word).unwrap().len(), 3);
    assert_eq!(canonicalize(&Word::parse("11,10,11", 12).unwrap()).to_string(), "11,10,11");
}
