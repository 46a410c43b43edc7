//! Commutation classes: moves, canonical words, pruned counting, and the
//! brute-force oracle used to check it.

pub mod classes;
pub mod moves;
pub mod oracle;
pub mod search;

pub use classes::{enumerate_classes, Classes, CommutationClass};
pub use moves::{apply_braid, apply_commutation, canonicalize, commutation_class_of, is_canonical};
pub use oracle::{matsumoto_graph, partition_reduced_words, MatsumotoGraph, MoveEdge, MoveKind, DEFAULT_ORACLE_BUDGET};
pub use search::{
    canonical_words, count_commutation_classes, count_commutation_classes_with, CanonicalWords, ClassCount,
    SearchOptions, MAX_SEARCH_RANK,
};
