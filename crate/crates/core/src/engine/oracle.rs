//! Brute-force ground truth: every reduced word, every move.
//!
//! Nothing here is pruned or clever. These routines exist to check the
//! canonical search, so they enumerate all reduced words and join words
//! that differ by a single move.

use std::collections::{BTreeSet, HashMap};

use num_traits::ToPrimitive;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::coxeter::{generators_commute, Permutation, Word};
use crate::engine::moves::is_braid_window;
use crate::error::{Error, Result};
use crate::reduced::{count_reduced_words, enumerate_reduced_words};

/// Default cap on the number of reduced words the oracle will enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

fn reduced_words_within_budget(w: &Permutation, budget: u64) -> Result<Vec<Word>> {
    let total = count_reduced_words(w);
    match total.to_u64() {
        Some(t) if t <= budget => Ok(enumerate_reduced_words(w).collect()),
        _ => Err(Error::BudgetExceeded { budget, needed: total.to_string() }),
    }
}

fn index_of(words: &[Word]) -> HashMap<&[u8], usize> {
    words.iter().enumerate().map(|(i, w)| (w.letters(), i)).collect()
}

/// Partitions all reduced words of `w` into commutation classes.
///
/// Classes are returned in order of their least member.
pub fn partition_reduced_words(w: &Permutation, budget: u64) -> Result<Vec<BTreeSet<Word>>> {
    let words = reduced_words_within_budget(w, budget)?;
    let index = index_of(&words);
    let mut uf = UnionFind::<usize>::new(words.len());
    let mut scratch = Vec::new();
    for (i, word) in words.iter().enumerate() {
        let letters = word.letters();
        for p in 1..letters.len() {
            if generators_commute(letters[p - 1] as usize, letters[p] as usize) {
                scratch.clear();
                scratch.extend_from_slice(letters);
                scratch.swap(p - 1, p);
                uf.union(i, index[scratch.as_slice()]);
            }
        }
    }
    let mut groups: HashMap<usize, BTreeSet<Word>> = HashMap::new();
    for (i, word) in words.into_iter().enumerate() {
        groups.entry(uf.find_mut(i)).or_default().insert(word);
    }
    let mut classes: Vec<BTreeSet<Word>> = groups.into_values().collect();
    classes.sort_by(|a, b| a.first().cmp(&b.first()));
    Ok(classes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Commutation,
    Braid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveEdge {
    pub from: usize,
    pub to: usize,
    pub kind: MoveKind,
}

/// All reduced words of an element joined by single commutation or braid moves.
#[derive(Debug, Clone, Serialize)]
pub struct MatsumotoGraph {
    pub nodes: Vec<Word>,
    /// Each undirected edge appears once, with `from < to`.
    pub edges: Vec<MoveEdge>,
}

pub fn matsumoto_graph(w: &Permutation, budget: u64) -> Result<MatsumotoGraph> {
    let nodes = reduced_words_within_budget(w, budget)?;
    let index = index_of(&nodes);
    let mut edges = Vec::new();
    let mut scratch = Vec::new();
    for (i, word) in nodes.iter().enumerate() {
        let letters = word.letters();
        for p in 1..letters.len() {
            if generators_commute(letters[p - 1] as usize, letters[p] as usize) {
                scratch.clear();
                scratch.extend_from_slice(letters);
                scratch.swap(p - 1, p);
                let j = index[scratch.as_slice()];
                if i < j {
                    edges.push(MoveEdge { from: i, to: j, kind: MoveKind::Commutation });
                }
            }
            if p + 1 < letters.len() && is_braid_window(&letters[p - 1..p + 2]) {
                scratch.clear();
                scratch.extend_from_slice(letters);
                scratch.swap(p - 1, p);
                scratch[p + 1] = scratch[p - 1];
                let j = index[scratch.as_slice()];
                if i < j {
                    edges.push(MoveEdge { from: i, to: j, kind: MoveKind::Braid });
                }
            }
        }
    }
    Ok(MatsumotoGraph { nodes, edges })
}

impl MatsumotoGraph {
    fn components_with(&self, keep: impl Fn(MoveKind) -> bool) -> usize {
        let mut uf = UnionFind::<usize>::new(self.nodes.len());
        let mut components = self.nodes.len();
        for e in self.edges.iter().filter(|e| keep(e.kind)) {
            if uf.union(e.from, e.to) {
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components_with(|_| true) <= 1
    }

    /// Number of components of the commutation-only subgraph.
    pub fn commutation_components(&self) -> usize {
        self.components_with(|k| k == MoveKind::Commutation)
    }

    /// Commutation-only components as sets of words, ordered by least member.
    pub fn commutation_classes(&self) -> Vec<BTreeSet<Word>> {
        let mut uf = UnionFind::<usize>::new(self.nodes.len());
        for e in self.edges.iter().filter(|e| e.kind == MoveKind::Commutation) {
            uf.union(e.from, e.to);
        }
        let mut groups: HashMap<usize, BTreeSet<Word>> = HashMap::new();
        for (i, w) in self.nodes.iter().enumerate() {
            groups.entry(uf.find_mut(i)).or_default().insert(w.clone());
        }
        let mut classes: Vec<_> = groups.into_values().collect();
        classes.sort_by(|a, b| a.first().cmp(&b.first()));
        classes
    }
}
