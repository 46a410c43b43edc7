//! Commutation and braid moves, class closure, and canonical words.

use std::collections::{BTreeSet, VecDeque};

use crate::coxeter::{generators_commute, Word};
use crate::error::{Error, Result};
use crate::repr::heap::heap_of_word;

/// Swaps the commuting letters at 1-based positions `pos` and `pos + 1`.
pub fn apply_commutation(word: &Word, pos: usize) -> Result<Word> {
    let letters = word.letters();
    if pos == 0 || pos >= letters.len() {
        return Err(Error::PositionOutOfRange { pos, len: letters.len() });
    }
    let (left, right) = (letters[pos - 1], letters[pos]);
    if !generators_commute(left as usize, right as usize) {
        return Err(Error::NotCommuting { pos, left, right });
    }
    let mut out = letters.to_vec();
    out.swap(pos - 1, pos);
    Ok(word.with_letters(out))
}

/// Replaces `i j i` by `j i j` at 1-based positions `pos..pos + 2`, `|i - j| = 1`.
pub fn apply_braid(word: &Word, pos: usize) -> Result<Word> {
    let letters = word.letters();
    if pos == 0 || pos + 2 > letters.len() {
        return Err(Error::PositionOutOfRange { pos, len: letters.len() });
    }
    if !is_braid_window(&letters[pos - 1..pos + 2]) {
        return Err(Error::NotBraid { pos });
    }
    let mut out = letters.to_vec();
    let (i, j) = (out[pos - 1], out[pos]);
    out[pos - 1] = j;
    out[pos] = i;
    out[pos + 1] = j;
    Ok(word.with_letters(out))
}

pub(crate) fn is_braid_window(w: &[u8]) -> bool {
    w[0] == w[2] && w[0].abs_diff(w[1]) == 1
}

/// Every word reachable from `word` by commutations, breadth first.
pub fn commutation_class_of(word: &Word) -> Result<BTreeSet<Word>> {
    if !word.is_reduced() {
        return Err(Error::NotReduced { word: word.to_string() });
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(w) = queue.pop_front() {
        for pos in 1..w.len() {
            if let Ok(next) = apply_commutation(&w, pos) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Whether `word` is the lexicographically least word of its class.
///
/// Fails exactly when some letter `x` could commute leftward past a larger
/// letter: for each arrival we track, per generator `g`, the largest letter
/// seen since the last letter not commuting with `g`.
pub fn is_canonical(word: &Word) -> bool {
    let mut window_max = vec![0u8; word.rank() + 1];
    for &x in word.letters() {
        let x_us = x as usize;
        if window_max[x_us] > x {
            return false;
        }
        for (g, slot) in window_max.iter_mut().enumerate().skip(1) {
            if generators_commute(g, x_us) {
                *slot = (*slot).max(x);
            } else {
                *slot = 0;
            }
        }
    }
    true
}

/// Lexicographically least member of the class of `word`, read off the heap.
pub fn canonicalize(word: &Word) -> Word {
    heap_of_word(word).greedy_word()
}
