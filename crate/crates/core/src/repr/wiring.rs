//! Wiring diagrams (ladder lotteries) of reduced words.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coxeter::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rung {
    /// Greedy column, starting at 0.
    pub column: usize,
    /// Generator index: the rung joins rows `row` and `row + 1`.
    pub row: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WiringDiagram {
    pub wires: usize,
    /// One rung per letter, in word order.
    pub rungs: Vec<Rung>,
}

/// Lays out `word` as rungs between adjacent wires. Each rung takes the
/// first column after the last rung touching either of its two rows.
pub fn wiring_diagram(word: &Word) -> WiringDiagram {
    let n = word.rank();
    // next_free[p] = first column not yet blocked at row p.
    let mut next_free = vec![0usize; n + 2];
    let rungs = word
        .letters()
        .iter()
        .map(|&x| {
            let r = x as usize;
            let column = next_free[r].max(next_free[r + 1]);
            next_free[r] = column + 1;
            next_free[r + 1] = column + 1;
            Rung { column, row: x }
        })
        .collect();
    WiringDiagram { wires: n, rungs }
}

impl WiringDiagram {
    pub fn columns(&self) -> usize {
        self.rungs.iter().map(|r| r.column + 1).max().unwrap_or(0)
    }

    /// Rungs as a set; equal for every word with the same heap.
    pub fn layout(&self) -> BTreeSet<Rung> {
        self.rungs.iter().copied().collect()
    }

    /// Routes `input` through the rungs in order, swapping the labels on
    /// the two rows each rung joins.
    pub fn execute<T: Clone>(&self, input: &[T]) -> Vec<T> {
        let mut state = input.to_vec();
        for r in &self.rungs {
            state.swap(r.row as usize - 1, r.row as usize);
        }
        state
    }

    /// Every pair of wires crosses exactly once.
    pub fn is_primitive(&self) -> bool {
        let n = self.wires;
        let mut crossed = vec![vec![false; n + 1]; n + 1];
        let mut state: Vec<usize> = (1..=n).collect();
        for r in &self.rungs {
            let p = r.row as usize - 1;
            let (a, b) = (state[p].min(state[p + 1]), state[p].max(state[p + 1]));
            if crossed[a][b] {
                return false;
            }
            crossed[a][b] = true;
            state.swap(p, p + 1);
        }
        self.rungs.len() == n * (n - 1) / 2
    }
}
