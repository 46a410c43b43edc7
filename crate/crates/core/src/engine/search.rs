//! Pruned depth-first search over canonical reduced words.
//!
//! Reduced words of `w` are grown one left descent at a time. A prefix is
//! kept only while it is still the lexicographically least word of its
//! commutation class; that property is prefix-closed, so each class is
//! reached exactly once, through its canonical word.
//!
//! State per node is three small values: the inverse of the remaining
//! permutation, its left-descent mask, and a mask of the generators that
//! would break canonicity if appended next. Appending `x` forbids every
//! `g <= x - 2` (they could slide left past `x`) and clears `x - 1, x, x + 1`
//! (the window of letters they commute with restarts at `x`).

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coxeter::{Permutation, Word};
use crate::error::{Error, Result};
use crate::reduced::BigCount;

/// Largest rank the bitmask search handles (generators fit in a `u64`).
pub const MAX_SEARCH_RANK: usize = 63;

const POLL_INTERVAL: u64 = 1 << 16;

#[derive(Clone, Copy)]
struct Node {
    // pos[v] = position of value v; pos[0] = 0 and pos[n+1..] = u8::MAX act as sentinels.
    pos: [u8; MAX_SEARCH_RANK + 3],
    descents: u64,
    forbidden: u64,
}

impl Node {
    fn root(w: &Permutation) -> Result<Self> {
        let n = w.rank();
        if n > MAX_SEARCH_RANK {
            return Err(Error::RankTooLarge { rank: n, max: MAX_SEARCH_RANK });
        }
        let mut pos = [u8::MAX; MAX_SEARCH_RANK + 3];
        pos[0] = 0;
        for (i, &v) in w.images().iter().enumerate() {
            pos[v as usize] = (i + 1) as u8;
        }
        let mut descents = 0u64;
        for g in 1..n {
            if pos[g] > pos[g + 1] {
                descents |= 1 << g;
            }
        }
        Ok(Self { pos, descents, forbidden: 0 })
    }

    #[inline]
    fn allowed(&self) -> u64 {
        self.descents & !self.forbidden
    }

    #[inline]
    fn child(&self, g: usize) -> Self {
        let mut next = *self;
        next.apply(g);
        next
    }

    /// Appends generator `g`, which must be an allowed descent.
    #[inline]
    fn apply(&mut self, g: usize) {
        self.pos.swap(g, g + 1);
        self.descents = update_descents(&self.pos, self.descents, g);
        self.forbidden = update_forbidden(self.forbidden, g);
    }
}

#[inline(always)]
fn update_descents(pos: &[u8], descents: u64, g: usize) -> u64 {
    let mut d = descents & !(0b111u64 << (g - 1));
    for h in g - 1..=g + 1 {
        if pos[h] > pos[h + 1] {
            d |= 1 << h;
        }
    }
    // Bit 0 is never a generator; the sentinel pos[0] = 0 keeps it clear.
    d
}

#[inline(always)]
fn update_forbidden(forbidden: u64, g: usize) -> u64 {
    let smaller = if g >= 2 { (1u64 << (g - 1)) - 2 } else { 0 };
    (forbidden | smaller) & !(0b111u64 << (g - 1))
}

/// Knobs for [`count_commutation_classes_with`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { threads: 1, time_limit: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub count: BigCount,
    /// False when the time limit cut the search short; `count` is then a lower bound.
    pub complete: bool,
    pub elapsed: Duration,
}

struct Walker<'a> {
    ticks: u64,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    stopped: bool,
}

impl Walker<'_> {
    #[inline]
    fn poll(&mut self) -> bool {
        self.ticks += 1;
        if self.ticks.is_multiple_of(POLL_INTERVAL) {
            if self.stop.load(Ordering::Relaxed) {
                self.stopped = true;
            } else if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.stop.store(true, Ordering::Relaxed);
                self.stopped = true;
            }
        }
        self.stopped
    }

    fn count(&mut self, node: &mut Node) -> u64 {
        if node.descents == 0 {
            return 1;
        }
        if self.poll() {
            return 0;
        }
        let mut allowed = node.allowed();
        let mut total = 0;
        let (descents, forbidden) = (node.descents, node.forbidden);
        while allowed != 0 {
            let g = allowed.trailing_zeros() as usize;
            allowed &= allowed - 1;
            node.apply(g);
            total += self.count(node);
            node.pos.swap(g, g + 1);
            node.descents = descents;
            node.forbidden = forbidden;
        }
        total
    }
}

/// Number of commutation classes of reduced words of `w`.
pub fn count_commutation_classes(w: &Permutation) -> Result<BigCount> {
    Ok(count_commutation_classes_with(w, &SearchOptions::default())?.count)
}

pub fn count_commutation_classes_with(w: &Permutation, options: &SearchOptions) -> Result<ClassCount> {
    let start = Instant::now();
    let root = Node::root(w)?;
    let stop = AtomicBool::new(false);
    let deadline = options.time_limit.map(|t| start + t);
    let threads = options.threads.max(1);

    let total: u64 = if threads == 1 {
        let mut walker = Walker { ticks: 0, deadline, stop: &stop, stopped: false };
        walker.count(&mut root.clone())
    } else {
        let (leaves, frontier) = split_frontier(root, threads * 256);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool construction");
        let stop = &stop;
        leaves
            + pool.install(|| {
                frontier
                    .into_par_iter()
                    .map(|mut node| {
                        let mut walker = Walker { ticks: 0, deadline, stop, stopped: false };
                        walker.count(&mut node)
                    })
                    .sum::<u64>()
            })
    };

    Ok(ClassCount { count: BigCount::from(total), complete: !stop.load(Ordering::Relaxed), elapsed: start.elapsed() })
}

/// Expands the search breadth-first until at least `target` open subtrees
/// exist. Returns the completed words met on the way and the open nodes.
fn split_frontier(root: Node, target: usize) -> (u64, Vec<Node>) {
    let mut leaves = 0;
    let mut frontier = vec![root];
    while !frontier.is_empty() && frontier.len() < target {
        let mut next = Vec::with_capacity(frontier.len() * 4);
        for node in &frontier {
            if node.descents == 0 {
                leaves += 1;
                continue;
            }
            let mut allowed = node.allowed();
            while allowed != 0 {
                let g = allowed.trailing_zeros() as usize;
                allowed &= allowed - 1;
                next.push(node.child(g));
            }
        }
        frontier = next;
    }
    (leaves, frontier)
}

struct Frame {
    node: Node,
    remaining: u64,
}

/// Streams the canonical (lexicographically least) word of every class of
/// `w`, in increasing lexicographic order.
pub struct CanonicalWords {
    rank: usize,
    stack: Vec<Frame>,
    prefix: Vec<u8>,
    root_leaf: bool,
}

impl CanonicalWords {
    pub fn new(w: &Permutation) -> Result<Self> {
        let root = Node::root(w)?;
        let root_leaf = root.descents == 0;
        let stack = if root_leaf { Vec::new() } else { vec![Frame { remaining: root.allowed(), node: root }] };
        Ok(Self { rank: w.rank(), stack, prefix: Vec::new(), root_leaf })
    }
}

impl Iterator for CanonicalWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.root_leaf {
            self.root_leaf = false;
            return Some(Word::from_raw(self.rank, Vec::new()));
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.remaining == 0 {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.prefix.pop();
                }
                continue;
            }
            let g = frame.remaining.trailing_zeros() as usize;
            frame.remaining &= frame.remaining - 1;
            let child = frame.node.child(g);
            self.prefix.push(g as u8);
            if child.descents == 0 {
                let word = Word::from_raw(self.rank, self.prefix.clone());
                self.prefix.pop();
                return Some(word);
            }
            self.stack.push(Frame { remaining: child.allowed(), node: child });
        }
    }
}

pub fn canonical_words(w: &Permutation) -> Result<CanonicalWords> {
    CanonicalWords::new(w)
}
