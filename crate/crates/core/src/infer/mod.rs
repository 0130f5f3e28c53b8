//! The probabilistic layer: total choices, credal bounds, well-founded
//! distributions and consistency checking.

mod choice;
mod credal;
mod wf;

pub use choice::{program_for_choice, total_choices, TotalChoice, TotalChoices};
pub use credal::{
    accumulate, check_consistency, credal_conditional, credal_unconditional, entail_each, event_bounds, Accumulators,
    ConsistencyReport, CredalInterval,
};
pub use wf::{wf_accumulate, wf_distribution, wf_query, WfDistribution, WfSums};

pub const DEFAULT_MAX_CHOICES: usize = 20;

/// Resource caps for total-choice enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of ground probabilistic facts enumerated (`2^n` choices).
    pub max_choices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_choices: DEFAULT_MAX_CHOICES }
    }
}

/// Work counters reported alongside results.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Stats {
    /// Total choices visited.
    pub choices: u64,
    /// Models examined (stable or well-founded).
    pub models: u64,
}

/// A conditional answer, `Undefined` when the evidence has probability zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conditional<T> {
    Defined(T),
    Undefined,
}

impl<T> Conditional<T> {
    pub fn defined(self) -> Option<T> {
        match self {
            Conditional::Defined(v) => Some(v),
            Conditional::Undefined => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InferError {
    #[error("{choices} probabilistic facts exceed the enumeration cap of {limit}")]
    TooManyChoices { limit: usize, choices: usize },
    #[error("inconsistent program: total choice {} has no stable model", .0.bits())]
    Inconsistent(TotalChoice),
    #[error("bad total choice: {0}")]
    BadChoice(String),
}
