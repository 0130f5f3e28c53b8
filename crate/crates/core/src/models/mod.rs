//! Model theory of ground normal programs: least models, reducts, stable
//! models, the well-founded model and cautious/brave entailment.

mod enumerate;
mod event;
mod fixpoint;
mod interp;

pub use enumerate::{exhaustive_stable_models, stable_models, StableModels, DEFAULT_ORACLE_LIMIT};
pub use event::{matches_three_valued, unresolved_atoms, Event, EventError};
pub use fixpoint::{alternating_iterates, is_stable, least_model, reduct, well_founded_model, ModelError};
pub use interp::{Interpretation, PartialInterpretation};

use crate::ground::GroundProgram;

/// Outcome of cautious and brave reasoning about one event.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub struct Entailment {
    /// At least one stable model exists.
    pub has_model: bool,
    /// The event holds in some stable model (brave).
    pub some: bool,
    /// The event holds in every stable model (cautious; vacuous when none).
    pub all: bool,
}

/// Cautious and brave entailment, stopping as soon as both answers are known.
pub fn entail(g: &GroundProgram, event: &Event) -> Entailment {
    entail_models(stable_models(g), event)
}

pub fn entail_models(models: impl Iterator<Item = Interpretation>, event: &Event) -> Entailment {
    let mut out = Entailment { has_model: false, some: false, all: true };
    for m in models {
        out.has_model = true;
        if event.holds(&m) {
            out.some = true;
        } else {
            out.all = false;
        }
        if out.some && !out.all {
            break;
        }
    }
    out
}
