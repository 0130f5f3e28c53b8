//! Least models, reducts, stability and the alternating fixpoint.

use super::interp::{Interpretation, PartialInterpretation};
use crate::ground::{GroundProgram, GroundRule};
use crate::syntax::Truth;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("program is not definite: rule `{0}` has a negative subgoal")]
    NotDefinite(String),
    #[error("brute-force oracle limited to {limit} undetermined atoms, program has {atoms}")]
    OracleLimit { limit: usize, atoms: usize },
}

/// Counter-based least fixpoint of the immediate-consequence operator,
/// linear in the total body size. Only rules for which `enabled` holds take
/// part; rules with a positive body atom in `blocked` are ignored.
pub(crate) fn least_fixpoint(
    g: &GroundProgram,
    enabled: impl Fn(&GroundRule) -> bool,
    blocked: Option<&[bool]>,
) -> Vec<bool> {
    let rs = g.rule_set();
    let mut truth = vec![false; g.atom_count()];
    let mut remaining = rs.pos_len.clone();
    let live: Vec<bool> =
        rs.rules.iter().map(|r| enabled(r) && blocked.is_none_or(|b| r.pos.iter().all(|a| !b[a.index()]))).collect();
    let mut queue = Vec::new();

    for (i, &fact) in g.fact_mask().iter().enumerate() {
        if fact {
            truth[i] = true;
            queue.push(i);
        }
    }
    for (r, rule) in rs.rules.iter().enumerate() {
        if live[r] && remaining[r] == 0 && !truth[rule.head.index()] {
            truth[rule.head.index()] = true;
            queue.push(rule.head.index());
        }
    }
    while let Some(a) = queue.pop() {
        for &r in &rs.pos_occ[a] {
            let r = r as usize;
            remaining[r] -= 1;
            if remaining[r] == 0 && live[r] {
                let h = rs.rules[r].head.index();
                if !truth[h] {
                    truth[h] = true;
                    queue.push(h);
                }
            }
        }
    }
    truth
}

/// Least model of a definite program.
pub fn least_model(g: &GroundProgram) -> Result<Interpretation, ModelError> {
    if let Some(rule) = g.rules().iter().find(|r| !r.neg.is_empty()) {
        return Err(ModelError::NotDefinite(g.rule_text(rule)));
    }
    Ok(Interpretation::from_bools(least_fixpoint(g, |_| true, None)))
}

/// Drops rules blocked by a true negated atom and strips remaining negations.
pub fn reduct(g: &GroundProgram, i: &Interpretation) -> GroundProgram {
    let rules = g
        .rules()
        .iter()
        .filter(|r| r.neg.iter().all(|a| !i.is_true(*a)))
        .map(|r| GroundRule::new(r.head, r.pos.clone(), Vec::new()))
        .collect();
    g.with_rules(rules)
}

/// `i` is stable iff it is the least model of its own reduct.
pub fn is_stable(g: &GroundProgram, i: &Interpretation) -> bool {
    // Same as least_model(reduct(g, i)) without materializing the reduct.
    least_fixpoint(g, |r| r.neg.iter().all(|a| !i.is_true(*a)), None) == i.as_bools()
}

/// Least model of the reduct with respect to the atoms in `assumed`.
pub(crate) fn lft(g: &GroundProgram, assumed: &[bool]) -> Vec<bool> {
    least_fixpoint(g, |r| r.neg.iter().all(|a| !assumed[a.index()]), None)
}

/// Iterates `S -> LFT(LFT(S))` from `start` until it stabilizes, returning
/// every iterate including `start` and the fixpoint.
pub fn alternating_iterates(g: &GroundProgram, start: Vec<bool>) -> Vec<Vec<bool>> {
    let mut trace = vec![start];
    loop {
        let cur = trace.last().expect("non-empty");
        let next = lft(g, &lft(g, cur));
        if &next == cur {
            return trace;
        }
        trace.push(next);
    }
}

/// Well-founded model via the alternating fixpoint: true atoms are the least
/// fixpoint of `LFT∘LFT` from the empty set, false atoms are those outside its
/// greatest fixpoint (iterated down from the full atom set).
pub fn well_founded_model(g: &GroundProgram) -> PartialInterpretation {
    let n = g.atom_count();
    let lfp = alternating_iterates(g, vec![false; n]).pop().expect("non-empty");
    let gfp = alternating_iterates(g, vec![true; n]).pop().expect("non-empty");
    let truth = (0..n)
        .map(|i| match (lfp[i], gfp[i]) {
            (true, _) => Truth::True,
            (false, false) => Truth::False,
            (false, true) => Truth::Undefined,
        })
        .collect();
    PartialInterpretation::from_truths(truth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{ground, AtomId, GroundProgram};
    use crate::syntax::{parse_program, Atom};

    fn g(text: &str) -> GroundProgram {
        ground(&parse_program(text).unwrap().program).unwrap()
    }

    fn interp(gp: &GroundProgram, true_atoms: &[&str]) -> Interpretation {
        let ids = true_atoms.iter().map(|s| gp.lookup(&parse_atom(s)).unwrap());
        Interpretation::from_true_atoms(gp.atom_count(), ids)
    }

    fn parse_atom(s: &str) -> Atom {
        crate::syntax::parse_query(s).unwrap().0[0].0.clone()
    }

    fn id(gp: &GroundProgram, s: &str) -> AtomId {
        gp.lookup(&parse_atom(s)).unwrap()
    }

    #[test]
    fn least_model_with_both_facts() {
        let gp = g("r. s. v :- r, s.");
        let m = least_model(&gp).unwrap();
        assert!(m.is_true(id(&gp, "v")));
    }

    #[test]
    fn least_model_no_rules() {
        let gp = GroundProgram::builder();
        let mut b = gp;
        let a = b.prop("a");
        let gp = b.build();
        assert!(!least_model(&gp).unwrap().is_true(a));
    }

    #[test]
    fn smokers_all_kept() {
        let gp = g("smokes(X) :- stress(X). smokes(X) :- influences(Y,X), smokes(Y). \
                    influences(a,b). influences(b,a). stress(b).");
        let m = least_model(&gp).unwrap();
        assert!(m.is_true(id(&gp, "smokes(a)")));
        assert!(m.is_true(id(&gp, "smokes(b)")));
    }

    #[test]
    fn least_model_rejects_negation() {
        let gp = g("a :- not b. b :- c. c.");
        assert!(matches!(least_model(&gp), Err(ModelError::NotDefinite(_))));
    }

    #[test]
    fn reduct_examples() {
        let gp = g("p :- not q, not r. q :- not p. 0.5::r.");
        let red = reduct(&gp, &interp(&gp, &["p"]));
        assert_eq!(red.rules().len(), 1);
        assert_eq!(red.rule_text(&red.rules()[0]), "p.");
        let red = reduct(&gp, &interp(&gp, &["q"]));
        assert_eq!(red.rules().len(), 1);
        assert_eq!(red.rule_text(&red.rules()[0]), "q.");

        let def = g("a. b :- a.");
        let red = reduct(&def, &interp(&def, &[]));
        assert_eq!(red.rules(), def.rules());
    }

    #[test]
    fn stability() {
        let gp = g("p :- not q, not r. q :- not p. r.");
        assert!(is_stable(&gp, &interp(&gp, &["q", "r"])));
        assert!(!is_stable(&gp, &interp(&gp, &["p", "r"])));
        let empty = GroundProgram::builder().build();
        assert!(is_stable(&empty, &Interpretation::all_false(0)));
    }

    #[test]
    fn wf_basic() {
        let gp = g("p :- not q, not r. q :- not p. 0.5::r.");
        let wf = well_founded_model(&gp);
        assert_eq!(wf.value(id(&gp, "r")), Truth::False);
        assert_eq!(wf.value(id(&gp, "p")), Truth::Undefined);
        assert_eq!(wf.value(id(&gp, "q")), Truth::Undefined);
    }

    #[test]
    fn wf_reasoning_by_cases() {
        let gp = g(include_str!("../../fixtures/cases.plp"));
        let wf = well_founded_model(&gp);
        assert_eq!(wf.undefined_atoms().count(), 3);
    }

    #[test]
    fn wf_barber() {
        let gp = g(include_str!("../../fixtures/barber_logic.plp"));
        let wf = well_founded_model(&gp);
        assert_eq!(wf.value(id(&gp, "shaves(b,a)")), Truth::True);
        assert_eq!(wf.value(id(&gp, "shaves(b,b)")), Truth::Undefined);
        // shaves(a,a) never becomes possibly true, so it is absent (false).
        assert!(gp.lookup(&parse_atom("shaves(a,a)")).is_none());
    }

    #[test]
    fn wf_game() {
        let gp = g(include_str!("../../fixtures/game.plp"));
        let wf = well_founded_model(&gp);
        assert_eq!(wf.value(id(&gp, "wins(c)")), Truth::True);
        // d has no moves, so wins(d) is never grounded.
        assert!(gp.lookup(&parse_atom("wins(d)")).is_none());
        assert_eq!(wf.value(id(&gp, "wins(a)")), Truth::Undefined);
        assert_eq!(wf.value(id(&gp, "wins(b)")), Truth::Undefined);

        let gp = g("wins(X) :- move(X,Y), not wins(Y). move(b,a). move(b,c). move(c,d).");
        let wf = well_founded_model(&gp);
        assert!(wf.is_total());
        assert_eq!(wf.value(id(&gp, "wins(b)")), Truth::True);
        assert_eq!(wf.value(id(&gp, "wins(c)")), Truth::True);
        assert!(gp.lookup(&parse_atom("wins(a)")).is_none());
    }

    #[test]
    fn gfp_is_lft_of_lfp() {
        let gp = g(include_str!("../../fixtures/coloring.plp"));
        let n = gp.atom_count();
        let lfp = alternating_iterates(&gp, vec![false; n]).pop().unwrap();
        let gfp = alternating_iterates(&gp, vec![true; n]).pop().unwrap();
        assert_eq!(gfp, lft(&gp, &lfp));
    }
}
