//! Distributions under the well-founded semantics: each total choice
//! contributes its weight to whatever its well-founded model says.

use num_traits::Zero;

use super::choice::{program_for_choice, total_choices};
use super::{Conditional, InferError, Limits, Stats};
use crate::ground::GroundProgram;
use crate::models::{matches_three_valued, well_founded_model};
use crate::prob::Prob;
use crate::syntax::{Assignments, Atom, Truth};

/// Probability that an atom is true, false or undefined in the well-founded
/// model. The three values sum to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfDistribution {
    pub p_true: Prob,
    pub p_false: Prob,
    pub p_undefined: Prob,
}

/// `joint` is the weight of choices matching both the query and the evidence,
/// `evidence` the weight matching the evidence alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfSums {
    pub joint: Prob,
    pub evidence: Prob,
    pub stats: Stats,
}

impl WfSums {
    pub fn conditional(&self) -> Conditional<Prob> {
        if self.evidence.is_zero() {
            Conditional::Undefined
        } else {
            Conditional::Defined(&self.joint / &self.evidence)
        }
    }
}

pub fn wf_accumulate(
    g: &GroundProgram,
    q: &Assignments,
    e: &Assignments,
    limits: &Limits,
) -> Result<WfSums, InferError> {
    let mut sums = WfSums { joint: Prob::zero(), evidence: Prob::zero(), stats: Stats::default() };
    for t in total_choices(g, limits)? {
        let wf = well_founded_model(&program_for_choice(g, &t));
        sums.stats.choices += 1;
        sums.stats.models += 1;
        if matches_three_valued(g, e, |a| wf.value(a)) {
            sums.evidence += &t.weight;
            if matches_three_valued(g, q, |a| wf.value(a)) {
                sums.joint += &t.weight;
            }
        }
    }
    Ok(sums)
}

/// Probability that the well-founded model matches every assignment in `q`,
/// given that it matches every assignment in `e`. An empty `e` is no evidence.
///
/// Matching is literal: `cold=false` given `cold=undefined` is zero, whatever
/// one might prefer to say about undefined evidence.
pub fn wf_query(
    g: &GroundProgram,
    q: &Assignments,
    e: &Assignments,
    limits: &Limits,
) -> Result<Conditional<Prob>, InferError> {
    Ok(wf_accumulate(g, q, e, limits)?.conditional())
}

/// The true/false/undefined triple for a single ground atom.
pub fn wf_distribution(g: &GroundProgram, atom: &Atom, limits: &Limits) -> Result<WfDistribution, InferError> {
    let mut d = WfDistribution { p_true: Prob::zero(), p_false: Prob::zero(), p_undefined: Prob::zero() };
    let id = g.lookup(atom);
    for t in total_choices(g, limits)? {
        let value = match id {
            Some(a) => well_founded_model(&program_for_choice(g, &t)).value(a),
            None => Truth::False,
        };
        let slot = match value {
            Truth::True => &mut d.p_true,
            Truth::False => &mut d.p_false,
            Truth::Undefined => &mut d.p_undefined,
        };
        *slot += &t.weight;
    }
    Ok(d)
}
