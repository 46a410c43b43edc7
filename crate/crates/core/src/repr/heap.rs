//! Heaps of pieces for words over the type-A generators.
//!
//! The heap of a word is the poset on its positions in which `i` precedes
//! `j` (with `i < j`) whenever the letters at `i` and `j` fail to commute,
//! closed transitively. Commutation-equivalent words have isomorphic heaps
//! and the members of a commutation class are exactly the linear extensions.

use std::collections::HashMap;

use num_traits::One;
use serde::Serialize;

use crate::coxeter::Word;
use crate::reduced::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeapElement {
    /// Index into the source word (0-based).
    pub position: usize,
    pub label: u8,
}

/// Lattice placement: `row` is the generator label, `column` grows upward
/// through the heap so that every cover joins diagonally adjacent cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeapCoord {
    pub row: i64,
    pub column: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Heap {
    pub rank: usize,
    pub elements: Vec<HeapElement>,
    /// Transitive reduction of the order as `(lower, upper)` element ids.
    pub covers: Vec<(usize, usize)>,
    pub coords: Vec<HeapCoord>,
    #[serde(skip)]
    lower_covers: Vec<Vec<usize>>,
}

/// Builds the heap of `word`.
pub fn heap_of_word(word: &Word) -> Heap {
    let letters = word.letters();
    let m = letters.len();
    let words = m.div_ceil(64).max(1);
    // below[j] = bitset of every element strictly below j.
    let mut below: Vec<Vec<u64>> = Vec::with_capacity(m);
    let mut last_seen: HashMap<u8, usize> = HashMap::new();
    let mut lower_covers: Vec<Vec<usize>> = Vec::with_capacity(m);

    for (j, &x) in letters.iter().enumerate() {
        // Only the latest occurrence of each non-commuting label can be a cover.
        let candidates: Vec<usize> = [x.wrapping_sub(1), x, x.wrapping_add(1)]
            .iter()
            .filter(|&&y| y >= 1)
            .filter_map(|y| last_seen.get(y).copied())
            .collect();
        let mut set = vec![0u64; words];
        for &c in &candidates {
            for (dst, src) in set.iter_mut().zip(&below[c]) {
                *dst |= *src;
            }
            set[c / 64] |= 1 << (c % 64);
        }
        let mut covers: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&c| !candidates.iter().any(|&d| d != c && below[d][c / 64] >> (c % 64) & 1 == 1))
            .collect();
        covers.sort_unstable();
        below.push(set);
        lower_covers.push(covers);
        last_seen.insert(x, j);
    }

    let elements: Vec<HeapElement> =
        letters.iter().enumerate().map(|(position, &label)| HeapElement { position, label }).collect();
    let covers = lower_covers.iter().enumerate().flat_map(|(j, cs)| cs.iter().map(move |&c| (c, j))).collect();

    // Columns alternate parity by label: (column + label) is odd.
    let mut coords: Vec<HeapCoord> = Vec::with_capacity(m);
    for (j, &x) in letters.iter().enumerate() {
        let parity = (x as i64 + 1) % 2;
        let column = match lower_covers[j].iter().map(|&c| coords[c].column).max() {
            Some(top) => {
                let c = top + 1;
                if c.rem_euclid(2) == parity {
                    c
                } else {
                    c + 1
                }
            }
            None => parity,
        };
        coords.push(HeapCoord { row: x as i64, column });
    }

    Heap { rank: word.rank(), elements, covers, coords, lower_covers }
}

impl Heap {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lower_covers(&self, element: usize) -> &[usize] {
        &self.lower_covers[element]
    }

    /// Label multiset as counts indexed by generator.
    pub fn label_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank];
        for e in &self.elements {
            counts[e.label as usize] += 1;
        }
        counts
    }

    /// Greedy linear extension: repeatedly take the minimal remaining
    /// element with the smallest label. The result is the lexicographically
    /// least word whose heap is this one.
    pub fn greedy_word(&self) -> Word {
        let m = self.len();
        let mut pending: Vec<usize> = self.lower_covers.iter().map(Vec::len).collect();
        let mut uppers: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(lo, hi) in &self.covers {
            uppers[lo].push(hi);
        }
        let mut done = vec![false; m];
        let mut letters = Vec::with_capacity(m);
        for _ in 0..m {
            let next = (0..m)
                .filter(|&e| !done[e] && pending[e] == 0)
                .min_by_key(|&e| (self.elements[e].label, e))
                .expect("a finite poset always has a minimal element");
            done[next] = true;
            letters.push(self.elements[next].label);
            for &u in &uppers[next] {
                pending[u] -= 1;
            }
        }
        Word::from_raw(self.rank, letters)
    }

    /// Labeled-poset isomorphism, decided by comparing greedy words.
    pub fn is_isomorphic(&self, other: &Heap) -> bool {
        self.rank == other.rank && self.greedy_word() == other.greedy_word()
    }
}

/// Canonical word of the class a heap represents.
pub fn representation_roundtrip(heap: &Heap) -> Word {
    heap.greedy_word()
}

/// Number of linear extensions, by dynamic programming over order ideals.
///
/// Ideals are swept by size; each layer maps an ideal to the number of
/// ways to build it one minimal element at a time.
pub fn linear_extension_count(heap: &Heap) -> BigCount {
    let m = heap.len();
    let words = m.div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = (0..m)
        .map(|e| {
            let mut mask = vec![0u64; words];
            for &c in heap.lower_covers(e) {
                mask[c / 64] |= 1 << (c % 64);
            }
            mask
        })
        .collect();

    let mut layer: HashMap<Vec<u64>, BigCount> = HashMap::new();
    layer.insert(vec![0u64; words], BigCount::one());
    for _ in 0..m {
        let mut next: HashMap<Vec<u64>, BigCount> = HashMap::with_capacity(layer.len() * 2);
        for (ideal, ways) in layer {
            for (e, mask) in masks.iter().enumerate() {
                let present = ideal[e / 64] >> (e % 64) & 1 == 1;
                if present || mask.iter().zip(&ideal).any(|(need, have)| need & !have != 0) {
                    continue;
                }
                let mut grown = ideal.clone();
                grown[e / 64] |= 1 << (e % 64);
                *next.entry(grown).or_default() += &ways;
            }
        }
        layer = next;
    }
    layer.into_values().next().unwrap_or_default()
}
