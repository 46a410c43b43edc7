//! Permutations and words for the type-A Coxeter system.
//!
//! `S_n` is generated by the adjacent transpositions `s_1, ..., s_{n-1}`,
//! where `s_i` exchanges `i` and `i + 1`. Generator indices are 1-based and
//! permutations are written in one-line notation on the values `1..=n`.
//!
//! Products compose as functions, `(u·v)(k) = u(v(k))`, and a word
//! `x_1 x_2 ... x_m` evaluates to `s_{x_1}·s_{x_2}·...·s_{x_m}`. Under this
//! rule right multiplication by `s_i` swaps the entries at positions `i` and
//! `i + 1`, while left multiplication swaps the values `i` and `i + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank representable with byte-sized images and letters.
pub const MAX_RANK: usize = u8::MAX as usize;

/// Largest rank that fits the packed [`PermKey`] encoding.
pub const PACKED_RANK: usize = 16;

/// Whether `s_i` and `s_j` satisfy a commutation relation.
///
/// Equal generators do not: `s_i s_i = e` is not a move between reduced words.
pub fn generators_commute(i: usize, j: usize) -> bool {
    i.abs_diff(j) >= 2
}

/// An element of `S_n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `[w(1), ..., w(n)]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let rank = values.len();
        if rank == 0 {
            return Err(Error::EmptyPermutation);
        }
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge { rank, max: MAX_RANK });
        }
        let mut seen = vec![false; rank + 1];
        for &v in values {
            if v == 0 || v > rank || seen[v] {
                return Err(Error::NotAPermutation { values: values.to_vec(), rank });
            }
            seen[v] = true;
        }
        Ok(Self { images: values.iter().map(|&v| v as u8).collect() })
    }

    pub fn identity(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self { images: (1..=rank as u8).collect() })
    }

    /// The longest element `[n, n-1, ..., 1]`.
    pub fn longest(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self { images: (1..=rank as u8).rev().collect() })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(k)` for `1 <= k <= n`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.rank();
        self.images.iter().enumerate().all(|(i, &v)| v as usize == n - i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self { images: inv }
    }

    /// The product `self · other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        let images = other.images.iter().map(|&v| self.images[v as usize - 1]).collect();
        Ok(Self { images })
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for (i, &a) in self.images.iter().enumerate() {
            count += self.images[i + 1..].iter().filter(|&&b| b < a).count();
        }
        count
    }

    /// Generators `i` with `ℓ(s_i·w) < ℓ(w)`, in increasing order.
    ///
    /// Under the composition rule these are exactly the possible first
    /// letters of reduced words for `w`: value `i + 1` sits left of value `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        let pos = self.inverse();
        (1..self.rank()).filter(|&i| pos.image(i) > pos.image(i + 1)).collect()
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        (1..self.rank()).contains(&i) && {
            let pa = self.images.iter().position(|&v| v as usize == i);
            let pb = self.images.iter().position(|&v| v as usize == i + 1);
            pa > pb
        }
    }

    /// `s_i · w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Ok(Self { images })
    }

    /// `w · s_i`: swaps the entries at positions `i` and `i + 1`.
    pub fn right_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    /// Packed 4-bit-per-image encoding, available for rank ≤ 16.
    pub fn key(&self) -> Option<PermKey> {
        PermKey::pack(&self.images)
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if (1..self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange { letter: i, rank: self.rank() })
        }
    }
}

fn check_rank(rank: usize) -> Result<()> {
    match rank {
        0 => Err(Error::ZeroRank),
        r if r > MAX_RANK => Err(Error::RankTooLarge { rank, max: MAX_RANK }),
        _ => Ok(()),
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `[4,3,2,1]`, with or without brackets and whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = body
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&values)
    }
}

/// A permutation of rank ≤ 16 packed into 64 bits, 4 bits per image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermKey(pub u64);

impl PermKey {
    /// Packs one-line values (1-based) into a key; `None` above rank 16.
    pub fn pack(values: &[u8]) -> Option<Self> {
        if values.len() > PACKED_RANK {
            return None;
        }
        let mut bits = 0u64;
        for (i, &v) in values.iter().enumerate() {
            bits |= ((v as u64 - 1) & 0xf) << (4 * i);
        }
        Some(Self(bits))
    }

    pub fn unpack(self, rank: usize) -> Vec<u8> {
        (0..rank).map(|i| ((self.0 >> (4 * i)) & 0xf) as u8 + 1).collect()
    }
}

/// An expression `s_{x_1} s_{x_2} ... s_{x_m}` over the generators of `S_n`.
///
/// Words order lexicographically by their letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
    rank: usize,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<u8>) -> Result<Self> {
        check_rank(rank)?;
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x as usize >= rank) {
            return Err(Error::LetterOutOfRange { letter: bad as usize, rank });
        }
        Ok(Self { letters, rank })
    }

    pub fn empty(rank: usize) -> Result<Self> {
        Self::new(rank, Vec::new())
    }

    /// Callers guarantee every letter lies in `1..rank`.
    pub(crate) fn from_raw(rank: usize, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&x| x >= 1 && (x as usize) < rank));
        Self { letters, rank }
    }

    /// Parses `"321323"` (one digit per letter) or `"10,3,11"`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if rank > 10 || s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| parse_err(&e.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err("expected digits")))
                .collect::<Result<_>>()?
        };
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x >= rank) {
            check_rank(rank)?;
            return Err(Error::LetterOutOfRange { letter: bad, rank });
        }
        Self::new(rank, letters.into_iter().map(|x| x as u8).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element this word represents.
    pub fn evaluate(&self) -> Permutation {
        let mut images: Vec<u8> = (1..=self.rank as u8).collect();
        for &x in &self.letters {
            images.swap(x as usize - 1, x as usize);
        }
        Permutation { images }
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { letters, rank: self.rank })
    }

    pub(crate) fn with_letters(&self, letters: Vec<u8>) -> Self {
        Self { letters, rank: self.rank }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters).then(self.rank.cmp(&other.rank))
    }
}

impl fmt::Display for Word {
    /// Digit strings up to rank 10, comma-separated integers beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank <= 10 {
            for x in &self.letters {
                write!(f, "{x}")?;
            }
        } else {
            for (i, x) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
