//! Stable-model enumeration.
//!
//! Search starts from the well-founded model, branches on undefined atoms and
//! after each decision runs a three-valued propagation that is sound for stable
//! models: atoms derivable using only rules whose negated atoms are already
//! false become true, and atoms outside the least model of the rules not
//! blocked by the current assignment become false. Every total leaf is still
//! checked with [`is_stable`] before it is emitted.

use super::fixpoint::{is_stable, least_fixpoint, well_founded_model, ModelError};
use super::interp::Interpretation;
use crate::ground::GroundProgram;
use crate::syntax::Truth;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Lazily enumerates the stable models of a ground program in a deterministic
/// order (true branch before false branch at each decision).
pub struct StableModels<'a> {
    g: &'a GroundProgram,
    stack: Vec<Vec<Truth>>,
    /// Rule-body occurrence counts, the branching score.
    occurrences: Vec<usize>,
}

impl<'a> StableModels<'a> {
    fn new(g: &'a GroundProgram) -> Self {
        let rs = g.rule_set();
        let occurrences = (0..g.atom_count()).map(|a| rs.pos_occ[a].len() + rs.neg_occ[a].len()).collect();
        let wf = well_founded_model(g);
        StableModels { g, stack: vec![wf.truths().to_vec()], occurrences }
    }

    fn pick(&self, assign: &[Truth]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (a, t) in assign.iter().enumerate() {
            if *t == Truth::Undefined && best.is_none_or(|b| self.occurrences[a] > self.occurrences[b]) {
                best = Some(a);
            }
        }
        best
    }
}

impl Iterator for StableModels<'_> {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        while let Some(mut assign) = self.stack.pop() {
            if !propagate(self.g, &mut assign) {
                continue;
            }
            match self.pick(&assign) {
                None => {
                    let model = Interpretation::from_bools(assign.iter().map(|t| *t == Truth::True).collect());
                    if is_stable(self.g, &model) {
                        return Some(model);
                    }
                }
                Some(a) => {
                    let mut alt = assign.clone();
                    alt[a] = Truth::False;
                    self.stack.push(alt);
                    assign[a] = Truth::True;
                    self.stack.push(assign);
                }
            }
        }
        None
    }
}

pub fn stable_models(g: &GroundProgram) -> StableModels<'_> {
    StableModels::new(g)
}

/// Narrows `assign` to a fixpoint. Returns `false` on conflict.
pub(crate) fn propagate(g: &GroundProgram, assign: &mut [Truth]) -> bool {
    loop {
        let is_false: Vec<bool> = assign.iter().map(|t| *t == Truth::False).collect();
        let is_true: Vec<bool> = assign.iter().map(|t| *t == Truth::True).collect();
        let lower = least_fixpoint(g, |r| r.neg.iter().all(|a| is_false[a.index()]), None);
        let upper = least_fixpoint(g, |r| r.neg.iter().all(|a| !is_true[a.index()]), Some(&is_false));
        let mut changed = false;
        for i in 0..assign.len() {
            if lower[i] {
                match assign[i] {
                    Truth::False => return false,
                    Truth::Undefined => {
                        assign[i] = Truth::True;
                        changed = true;
                    }
                    Truth::True => {}
                }
            }
            if !upper[i] {
                match assign[i] {
                    Truth::True => return false,
                    Truth::Undefined => {
                        assign[i] = Truth::False;
                        changed = true;
                    }
                    Truth::False => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Brute force over interpretations, keeping the stable ones. Test oracle.
///
/// Facts are true and atoms heading no rule are false in every stable model,
/// so only the remaining rule heads are enumerated; `limit` caps their number.
pub fn exhaustive_stable_models(g: &GroundProgram, limit: usize) -> Result<Vec<Interpretation>, ModelError> {
    let n = g.atom_count();
    let mut is_head = vec![false; n];
    for r in g.rules() {
        is_head[r.head.index()] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&a| is_head[a] && !g.fact_mask()[a]).collect();
    if free.len() > limit || free.len() >= 64 {
        return Err(ModelError::OracleLimit { limit, atoms: free.len() });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut truth = g.fact_mask().to_vec();
        for (bit, &a) in free.iter().enumerate() {
            truth[a] = mask >> bit & 1 == 1;
        }
        let i = Interpretation::from_bools(truth);
        if is_stable(g, &i) {
            out.push(i);
        }
    }
    Ok(out)
}
