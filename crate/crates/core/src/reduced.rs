//! Reduced words: lexicographic enumeration and exact counting.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::One;

use crate::coxeter::{PermKey, Permutation, Word};
use crate::error::Result;

/// Exact nonnegative count. Reduced-word and class counts outgrow any
/// fixed-width integer quickly.
pub type BigCount = BigUint;

/// Streams every reduced word of a permutation in lexicographic order.
///
/// Words are produced on demand from a depth-first walk that prepends left
/// descents; only the current prefix is held in memory.
pub struct ReducedWords {
    rank: usize,
    // pos[v] = position of value v in the remaining permutation (1-based, index 0 unused).
    pos: Vec<u8>,
    prefix: Vec<u8>,
    // Next generator to try at each depth.
    next: Vec<u8>,
    target: usize,
    finished: bool,
}

impl ReducedWords {
    pub fn new(w: &Permutation) -> Self {
        let inv = w.inverse();
        let mut pos = vec![0u8];
        pos.extend_from_slice(inv.images());
        let target = w.length();
        Self {
            rank: w.rank(),
            pos,
            prefix: Vec::with_capacity(target),
            next: vec![1; target + 1],
            target,
            finished: false,
        }
    }

    fn is_descent(&self, g: usize) -> bool {
        self.pos[g] > self.pos[g + 1]
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.finished {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.target {
                let word = Word::from_raw(self.rank, self.prefix.clone());
                // Backtrack so the following call resumes with the next sibling.
                match self.prefix.pop() {
                    Some(g) => self.pos.swap(g as usize, g as usize + 1),
                    None => self.finished = true,
                }
                return Some(word);
            }
            let start = self.next[depth] as usize;
            match (start..self.rank).find(|&g| self.is_descent(g)) {
                Some(g) => {
                    self.next[depth] = g as u8 + 1;
                    self.pos.swap(g, g + 1);
                    self.prefix.push(g as u8);
                    self.next[depth + 1] = 1;
                }
                None => {
                    self.next[depth] = 1;
                    match self.prefix.pop() {
                        Some(g) => self.pos.swap(g as usize, g as usize + 1),
                        None => {
                            self.finished = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

pub fn enumerate_reduced_words(w: &Permutation) -> ReducedWords {
    ReducedWords::new(w)
}

/// Number of reduced words of `w` via the memoized descent recursion
/// `R(w) = Σ_{i ∈ D_L(w)} R(s_i·w)`, `R(e) = 1`.
pub fn count_reduced_words(w: &Permutation) -> BigCount {
    let inv = w.inverse();
    let mut pos = vec![0u8];
    pos.extend_from_slice(inv.images());
    if w.key().is_some() {
        let mut memo = HashMap::new();
        count_memo(&mut pos, &mut memo, |p| PermKey::pack(&p[1..]).expect("rank fits packed key"))
    } else {
        let mut memo = HashMap::new();
        count_memo(&mut pos, &mut memo, |p| p.to_vec())
    }
}

fn count_memo<K, F>(pos: &mut [u8], memo: &mut HashMap<K, BigCount>, key: F) -> BigCount
where
    K: Hash + Eq,
    F: Fn(&[u8]) -> K + Copy,
{
    let n = pos.len() - 1;
    let k = key(pos);
    if let Some(c) = memo.get(&k) {
        return c.clone();
    }
    let mut total = BigCount::default();
    let mut any = false;
    for g in 1..n {
        if pos[g] > pos[g + 1] {
            any = true;
            pos.swap(g, g + 1);
            total += count_memo(pos, memo, key);
            pos.swap(g, g + 1);
        }
    }
    if !any {
        total = BigCount::one();
    }
    memo.insert(k, total.clone());
    total
}

/// Reduced words of the longest element of `S_n` by the hook-length
/// product for the staircase shape:
/// `C(n,2)! / Π_{k=1}^{n-1} (2k-1)^{n-k}`.
pub fn count_reduced_words_longest(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(crate::error::Error::ZeroRank);
    }
    let m = n * (n - 1) / 2;
    let mut numerator = BigCount::one();
    for k in 2..=m {
        numerator *= BigCount::from(k);
    }
    let mut denominator = BigCount::one();
    for k in 1..n {
        let hook = BigCount::from(2 * k - 1);
        denominator *= num_traits::pow(hook, n - k);
    }
    debug_assert!((&numerator % &denominator) == BigCount::default());
    Ok(numerator / denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w0(n: usize) -> Permutation {
        Permutation::longest(n).unwrap()
    }

    /// All words of length ℓ(w) over 1..n that evaluate to w, in lex order.
    fn brute_reduced(w: &Permutation) -> Vec<String> {
        let n = w.rank();
        let m = w.length();
        let mut out = Vec::new();
        let mut letters = vec![1u8; m];
        loop {
            let word = Word::new(n, letters.clone()).unwrap();
            if &word.evaluate() == w {
                out.push(word.to_string());
            }
            // odometer increment
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if (letters[i] as usize) < n - 1 {
                    letters[i] += 1;
                    break;
                }
                letters[i] = 1;
            }
        }
    }

    #[test]
    fn w0_s3_words() {
        let words: Vec<String> = enumerate_reduced_words(&w0(3)).map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["121", "212"]);
        assert_eq!(brute_reduced(&w0(3)), words);
    }

    #[test]
    fn w0_s4_has_16_words() {
        assert_eq!(enumerate_reduced_words(&w0(4)).count(), 16);
        assert_eq!(count_reduced_words(&w0(4)), BigCount::from(16u32));
    }

    #[test]
    fn identity_has_one_empty_word() {
        let e = Permutation::identity(4).unwrap();
        let words: Vec<Word> = enumerate_reduced_words(&e).collect();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_empty());
        assert_eq!(count_reduced_words(&e), BigCount::one());
        assert_eq!(enumerate_reduced_words(&Permutation::identity(1).unwrap()).count(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force_on_s4() {
        for images in [[1, 2, 3, 4], [2, 1, 4, 3], [3, 1, 4, 2], [4, 3, 2, 1], [2, 4, 1, 3], [4, 1, 2, 3]] {
            let w = Permutation::from_one_line(&images).unwrap();
            let words: Vec<String> = enumerate_reduced_words(&w).map(|w| w.to_string()).collect();
            assert_eq!(words, brute_reduced(&w), "{w}");
        }
    }

    #[test]
    fn w0_s5_count_frozen_from_enumeration() {
        let brute = brute_reduced(&w0(5));
        assert_eq!(brute.len(), 768);
        assert_eq!(enumerate_reduced_words(&w0(5)).count(), 768);
        assert_eq!(count_reduced_words(&w0(5)), BigCount::from(768u32));
    }

    #[test]
    fn hook_length_small_values() {
        assert_eq!(count_reduced_words_longest(1).unwrap(), BigCount::one());
        assert_eq!(count_reduced_words_longest(2).unwrap(), BigCount::one());
        assert_eq!(count_reduced_words_longest(4).unwrap(), BigCount::from(16u32));
        assert_eq!(count_reduced_words_longest(6).unwrap(), BigCount::from(292864u32));
        assert!(count_reduced_words_longest(0).is_err());
    }

    #[test]
    fn three_routes_agree() {
        for n in 1..=6 {
            let w = w0(n);
            let hook = count_reduced_words_longest(n).unwrap();
            assert_eq!(count_reduced_words(&w), hook);
            assert_eq!(BigCount::from(enumerate_reduced_words(&w).count()), hook);
        }
        for n in 7..=8 {
            assert_eq!(count_reduced_words(&w0(n)), count_reduced_words_longest(n).unwrap());
        }
    }

    #[test]
    fn emitted_words_are_reduced_and_strictly_increasing() {
        let w = w0(5);
        let mut prev: Option<Word> = None;
        for word in enumerate_reduced_words(&w) {
            assert!(word.is_reduced());
            assert_eq!(word.evaluate(), w);
            if let Some(p) = &prev {
                assert!(p < &word);
            }
            prev = Some(word);
        }
    }

    #[test]
    fn large_rank_uses_general_keys() {
        // rank 17 does not pack; a short element keeps the recursion small.
        let mut images: Vec<usize> = (1..=17).collect();
        images.swap(0, 2);
        let w = Permutation::from_one_line(&images).unwrap();
        assert!(w.key().is_none());
        assert_eq!(count_reduced_words(&w), BigCount::from(enumerate_reduced_words(&w).count()));
    }
}
