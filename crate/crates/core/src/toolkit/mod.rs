//! Breadth-first search between diagrams, random diagrams and walks, invariance fuzzing,
//! and reproducible corpora.

mod corpus;
mod fuzz;
mod random;
mod search;

pub use corpus::{exhaustive, exhaustive_up_to, Corpus, CorpusSpec};
pub use fuzz::{fuzz_invariance, FuzzReport, Violation};
pub use random::{random_diagram, random_walk, random_walk_with, WalkParams};
pub use search::{bfs_search, neighbours, SearchOutcome, SearchStop, StopReason};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::ClassifyError;
use crate::moves::MoveError;

/// Limits for `bfs_search`. Insertions are only generated while the diagram stays within
/// `max_arrows`, which keeps the state space finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_depth: usize,
    pub max_arrows: usize,
    pub max_states: usize,
    /// Seed for callers that randomize; the search itself is deterministic and ignores it.
    pub seed: u64,
}

impl SearchBudget {
    pub fn new(max_depth: usize, max_arrows: usize, max_states: usize, seed: u64) -> Result<Self, ToolkitError> {
        let b = SearchBudget { max_depth, max_arrows, max_states, seed };
        b.check()?;
        Ok(b)
    }

    fn check(&self) -> Result<(), ToolkitError> {
        if self.max_depth == 0 || self.max_arrows == 0 || self.max_states == 0 {
            return Err(ToolkitError::Budget(*self));
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 8, max_arrows: 6, max_states: 200_000, seed: 1 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToolkitError {
    #[error("budget limits must be positive: {0:?}")]
    Budget(SearchBudget),
    #[error("cannot search between {0} and {1}")]
    Incomparable(String, String),
    #[error("diagram has {got} arrows, above the budget of {max}")]
    TooLarge { got: usize, max: usize },
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}
