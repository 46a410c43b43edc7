use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("one-line notation must be nonempty")]
    EmptyPermutation,

    #[error("{values:?} is not a permutation of 1..={rank}")]
    NotAPermutation { values: Vec<usize>, rank: usize },

    #[error("rank {rank} exceeds the supported maximum of {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("letter {letter} is out of range for rank {rank} (expected 1..={})", rank.saturating_sub(1))]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("letters {left} and {right} at position {pos} do not commute")]
    NotCommuting { pos: usize, left: u8, right: u8 },

    #[error("no braid pattern at position {pos}")]
    NotBraid { pos: usize },

    #[error("word {word} is not reduced")]
    NotReduced { word: String },

    #[error("word {word} is not a reduced word of the longest element")]
    NotLongest { word: String },

    #[error("oracle budget of {budget} reduced words exceeded ({needed} required)")]
    BudgetExceeded { budget: u64, needed: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
