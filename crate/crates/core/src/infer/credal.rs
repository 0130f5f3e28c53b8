//! Credal bounds: per total choice, cautious and brave entailment over the
//! stable models decide which accumulators the choice's weight feeds.

use num_traits::Zero;

use super::choice::{program_for_choice, total_choices, TotalChoice};
use super::{Conditional, InferError, Limits, Stats};
use crate::ground::GroundProgram;
use crate::models::{stable_models, Entailment, Event, Interpretation};
use crate::prob::{self, Prob};

/// `0 <= lower <= upper <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CredalInterval {
    pub lower: Prob,
    pub upper: Prob,
}

impl CredalInterval {
    pub fn point(p: Prob) -> Self {
        CredalInterval { lower: p.clone(), upper: p }
    }

    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }
}

/// The four sums behind a conditional credal query:
/// `a` (q∧e cautious), `b` (q∧e brave), `c` (¬q∧e cautious), `d` (¬q∧e brave).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Accumulators {
    pub a: Prob,
    pub b: Prob,
    pub c: Prob,
    pub d: Prob,
    pub stats: Stats,
}

impl Accumulators {
    pub fn conditional(&self) -> Conditional<CredalInterval> {
        let Accumulators { a, b, c, d, .. } = self;
        let zero = Prob::zero();
        if (b + d).is_zero() {
            return Conditional::Undefined;
        }
        let interval = if (b + c).is_zero() && *d > zero {
            CredalInterval::point(zero)
        } else if (a + d).is_zero() && *b > zero {
            CredalInterval::point(prob::one())
        } else {
            CredalInterval { lower: a / (a + d), upper: b / (b + c) }
        };
        Conditional::Defined(interval)
    }
}

/// Cautious and brave entailment of several events over one model stream,
/// stopping once every answer is settled.
pub fn entail_each(models: impl Iterator<Item = Interpretation>, events: &[&Event]) -> (Vec<Entailment>, u64) {
    let mut out = vec![Entailment { has_model: false, some: false, all: true }; events.len()];
    let mut seen = 0u64;
    for m in models {
        seen += 1;
        for (ent, ev) in out.iter_mut().zip(events) {
            ent.has_model = true;
            if ev.holds(&m) {
                ent.some = true;
            } else {
                ent.all = false;
            }
        }
        if out.iter().all(|e| e.some && !e.all) {
            break;
        }
    }
    (out, seen)
}

/// Runs the conditional-query accumulation. Aborts on the first total choice
/// without a stable model.
pub fn accumulate(g: &GroundProgram, q: &Event, e: &Event, limits: &Limits) -> Result<Accumulators, InferError> {
    let pos = q.clone().and(e.clone());
    let neg = q.clone().negate().and(e.clone());
    let mut acc =
        Accumulators { a: Prob::zero(), b: Prob::zero(), c: Prob::zero(), d: Prob::zero(), stats: Stats::default() };
    for t in total_choices(g, limits)? {
        let gt = program_for_choice(g, &t);
        let (ents, seen) = entail_each(stable_models(&gt), &[&pos, &neg]);
        acc.stats.choices += 1;
        acc.stats.models += seen;
        if !ents[0].has_model {
            return Err(InferError::Inconsistent(t));
        }
        if ents[0].all {
            acc.a += &t.weight;
        }
        if ents[0].some {
            acc.b += &t.weight;
        }
        if ents[1].all {
            acc.c += &t.weight;
        }
        if ents[1].some {
            acc.d += &t.weight;
        }
    }
    Ok(acc)
}

/// Lower and upper probability of `q`.
pub fn credal_unconditional(g: &GroundProgram, q: &Event, limits: &Limits) -> Result<CredalInterval, InferError> {
    let mut out = event_bounds(g, &[q], limits)?;
    Ok(out.pop().expect("one event in, one interval out"))
}

/// Lower and upper probability of `q` given `e`, or `Undefined` when no
/// stable model of any total choice satisfies `e`.
pub fn credal_conditional(
    g: &GroundProgram,
    q: &Event,
    e: &Event,
    limits: &Limits,
) -> Result<Conditional<CredalInterval>, InferError> {
    Ok(accumulate(g, q, e, limits)?.conditional())
}

/// Lower and upper probability of each event in one sweep over the total
/// choices.
pub fn event_bounds(g: &GroundProgram, events: &[&Event], limits: &Limits) -> Result<Vec<CredalInterval>, InferError> {
    let always = Event::tautology();
    let tracked: Vec<&Event> = std::iter::once(&always).chain(events.iter().copied()).collect();
    let mut out = vec![CredalInterval::point(Prob::zero()); events.len()];
    for t in total_choices(g, limits)? {
        let gt = program_for_choice(g, &t);
        let (ents, _) = entail_each(stable_models(&gt), &tracked);
        if !ents[0].has_model {
            return Err(InferError::Inconsistent(t));
        }
        for (iv, ent) in out.iter_mut().zip(&ents[1..]) {
            if ent.all {
                iv.lower += &t.weight;
            }
            if ent.some {
                iv.upper += &t.weight;
            }
        }
    }
    Ok(out)
}

/// Outcome of [`check_consistency`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    /// First total choice (in enumeration order) with no stable model.
    pub witness: Option<TotalChoice>,
    pub stats: Stats,
}

pub fn check_consistency(g: &GroundProgram, limits: &Limits) -> Result<ConsistencyReport, InferError> {
    let mut stats = Stats::default();
    for t in total_choices(g, limits)? {
        stats.choices += 1;
        if stable_models(&program_for_choice(g, &t)).next().is_none() {
            return Ok(ConsistencyReport { consistent: false, witness: Some(t), stats });
        }
        stats.models += 1;
    }
    Ok(ConsistencyReport { consistent: true, witness: None, stats })
}
