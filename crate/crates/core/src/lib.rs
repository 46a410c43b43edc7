//! Reduced words and commutation classes of the longest element of the
//! symmetric group.
//!
//! The crate counts and enumerates reduced words of permutations, counts
//! their commutation classes with a pruned search over lexicographically
//! least representatives, checks those counts against a brute-force
//! partition, and draws each class as a heap, a wiring diagram, or a
//! rhombic tiling.
//!
//! ```
//! use commclass_core::{count_commutation_classes, Permutation};
//!
//! let w0 = Permutation::longest(5).unwrap();
//! assert_eq!(count_commutation_classes(&w0).unwrap().to_string(), "62");
//! ```

pub mod coxeter;
pub mod engine;
pub mod error;
pub mod reduced;
pub mod reference;
pub mod repr;

pub use coxeter::{generators_commute, PermKey, Permutation, Word};
pub use engine::{
    apply_braid, apply_commutation, canonical_words, canonicalize, commutation_class_of, count_commutation_classes,
    count_commutation_classes_with, enumerate_classes, is_canonical, matsumoto_graph, partition_reduced_words,
    ClassCount, CommutationClass, MatsumotoGraph, MoveKind, SearchOptions, DEFAULT_ORACLE_BUDGET,
};
pub use error::{Error, Result};
pub use reduced::{count_reduced_words, count_reduced_words_longest, enumerate_reduced_words, BigCount};
