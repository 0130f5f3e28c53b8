use std::collections::{HashMap, HashSet};

use super::program::{GroundProgram, GroundProgramBuilder, GroundRule};
use crate::syntax::{Atom, Program, Rule, Term};

/// Constant injected when a program mentions none.
pub const RESERVED_CONSTANT: &str = "u0";

pub const DEFAULT_MAX_GROUND_RULES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroundError {
    #[error("grounding exceeds {limit} ground rules")]
    TooManyRules { limit: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct GroundOptions {
    pub max_ground_rules: usize,
}

impl Default for GroundOptions {
    fn default() -> Self {
        GroundOptions { max_ground_rules: DEFAULT_MAX_GROUND_RULES }
    }
}

/// The Herbrand universe used for grounding: program constants in first
/// appearance order, or the reserved constant alone.
pub fn herbrand_universe(program: &Program) -> Vec<String> {
    let mut constants = program.constants();
    if constants.is_empty() {
        constants.push(RESERVED_CONSTANT.to_string());
    }
    constants
}

pub fn ground(program: &Program) -> Result<GroundProgram, GroundError> {
    ground_with(program, GroundOptions::default())
}

/// Active grounding: only rule instances whose positive body atoms are all
/// possibly true survive, where "possibly true" is the least fixpoint seeded
/// by facts and choice atoms that ignores negative subgoals. Everything else is
/// false in every model of every total choice.
pub fn ground_with(program: &Program, opts: GroundOptions) -> Result<GroundProgram, GroundError> {
    let universe = herbrand_universe(program);
    let mut builder = GroundProgramBuilder::default();

    for pf in &program.prob_facts {
        let vars: Vec<&str> = distinct_vars(std::iter::once(&pf.atom));
        for subst in all_tuples(universe.len(), vars.len()) {
            let atom = instantiate(&pf.atom, &vars, &subst, &universe);
            let id = builder.atom(atom);
            builder.choice(id, pf.prob.clone());
        }
    }

    let (facts, rules): (Vec<&Rule>, Vec<&Rule>) = program.rules.iter().partition(|r| r.is_fact());
    let mut possible: HashSet<Atom> = HashSet::new();
    for pf in &program.prob_facts {
        let vars = distinct_vars(std::iter::once(&pf.atom));
        for subst in all_tuples(universe.len(), vars.len()) {
            possible.insert(instantiate(&pf.atom, &vars, &subst, &universe));
        }
    }
    for fact in &facts {
        let vars = distinct_vars(std::iter::once(&fact.head));
        for subst in all_tuples(universe.len(), vars.len()) {
            let atom = instantiate(&fact.head, &vars, &subst, &universe);
            possible.insert(atom.clone());
            let id = builder.atom(atom);
            builder.fact(id);
        }
    }

    // Naive fixpoint over the possibly-true set.
    loop {
        let index = PredicateIndex::new(&possible);
        let mut fresh = Vec::new();
        let mut instances = 0usize;
        for rule in &rules {
            let substs = matching_substitutions(rule, &index, &universe);
            instances += substs.len();
            if instances > opts.max_ground_rules {
                return Err(GroundError::TooManyRules { limit: opts.max_ground_rules });
            }
            let vars = rule.variables();
            for subst in substs {
                let head = instantiate(&rule.head, &vars, &subst, &universe);
                if !possible.contains(&head) {
                    fresh.push(head);
                }
            }
        }
        drop(index);
        if fresh.is_empty() {
            break;
        }
        possible.extend(fresh);
    }

    let index = PredicateIndex::new(&possible);
    let mut seen: HashSet<GroundRule> = HashSet::new();
    for rule in &rules {
        let vars = rule.variables();
        for subst in matching_substitutions(rule, &index, &universe) {
            let head = builder.atom(instantiate(&rule.head, &vars, &subst, &universe));
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for goal in &rule.body {
                let atom = instantiate(&goal.atom, &vars, &subst, &universe);
                if goal.negated {
                    // `not a` with `a` never possibly true always holds.
                    if possible.contains(&atom) {
                        neg.push(builder.atom(atom));
                    }
                } else {
                    pos.push(builder.atom(atom));
                }
            }
            let ground = GroundRule::new(head, pos, neg);
            if seen.insert(ground.clone()) {
                builder.rule(ground.head, ground.pos, ground.neg);
            }
        }
    }
    Ok(builder.build())
}

struct PredicateIndex<'a> {
    by_pred: HashMap<String, Vec<&'a Atom>>,
}

impl<'a> PredicateIndex<'a> {
    fn new(atoms: &'a HashSet<Atom>) -> Self {
        let mut by_pred: HashMap<String, Vec<&Atom>> = HashMap::new();
        for a in atoms {
            by_pred.entry(a.predicate.clone()).or_default().push(a);
        }
        PredicateIndex { by_pred }
    }

    // Arity is fixed per predicate, so the name alone selects candidates.
    fn candidates(&self, atom: &Atom) -> &[&'a Atom] {
        self.by_pred.get(atom.predicate.as_str()).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// All complete substitutions (constant indices, in `rule.variables()` order)
/// under which every positive body atom is in the index; variables left unbound
/// by the positive body range over the whole universe. Sorted lexicographically.
fn matching_substitutions(rule: &Rule, index: &PredicateIndex<'_>, universe: &[String]) -> Vec<Vec<usize>> {
    let vars = rule.variables();
    let const_index: HashMap<&str, usize> = universe.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
    let positives: Vec<&Atom> = rule.body.iter().filter(|g| !g.negated).map(|g| &g.atom).collect();

    let mut partials: Vec<Vec<Option<usize>>> = Vec::new();
    let mut binding = vec![None; vars.len()];
    join(&positives, 0, &vars, &const_index, index, &mut binding, &mut partials);

    let mut out = Vec::new();
    for partial in partials {
        let free: Vec<usize> = (0..vars.len()).filter(|i| partial[*i].is_none()).collect();
        for tuple in all_tuples(universe.len(), free.len()) {
            let mut full: Vec<usize> = partial.iter().map(|v| v.unwrap_or(0)).collect();
            for (slot, value) in free.iter().zip(tuple) {
                full[*slot] = value;
            }
            out.push(full);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn join(
    positives: &[&Atom],
    at: usize,
    vars: &[&str],
    const_index: &HashMap<&str, usize>,
    index: &PredicateIndex<'_>,
    binding: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    let Some(pattern) = positives.get(at) else {
        out.push(binding.clone());
        return;
    };
    'candidates: for cand in index.candidates(pattern) {
        let saved = binding.clone();
        for (term, value) in pattern.args.iter().zip(&cand.args) {
            let value = const_index[value.name()];
            match term {
                Term::Constant(c) => {
                    if const_index.get(c.as_str()) != Some(&value) {
                        *binding = saved;
                        continue 'candidates;
                    }
                }
                Term::Variable(v) => {
                    let slot = vars.iter().position(|x| x == v).expect("rule variable");
                    match binding[slot] {
                        Some(bound) if bound != value => {
                            *binding = saved;
                            continue 'candidates;
                        }
                        _ => binding[slot] = Some(value),
                    }
                }
            }
        }
        join(positives, at + 1, vars, const_index, index, binding, out);
        *binding = saved;
    }
}

fn distinct_vars<'a>(atoms: impl Iterator<Item = &'a Atom>) -> Vec<&'a str> {
    let mut vars: Vec<&str> = Vec::new();
    for v in atoms.flat_map(Atom::variables) {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars
}

fn instantiate(atom: &Atom, vars: &[&str], subst: &[usize], universe: &[String]) -> Atom {
    Atom {
        predicate: atom.predicate.clone(),
        args: atom
            .args
            .iter()
            .map(|t| match t {
                Term::Constant(c) => Term::Constant(c.clone()),
                Term::Variable(v) => {
                    let slot = vars.iter().position(|x| x == v).expect("bound variable");
                    Term::Constant(universe[subst[slot]].clone())
                }
            })
            .collect(),
    }
}

/// `n^k` tuples over `0..n` in lexicographic order.
fn all_tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if k == 0 { 1 } else { n.checked_pow(k as u32).unwrap_or(usize::MAX) };
    (0..total).map(move |mut i| {
        let mut t = vec![0; k];
        for slot in (0..k).rev() {
            t[slot] = i % n;
            i /= n;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::ratio;
    use crate::syntax::parse_program;

    fn g(text: &str) -> GroundProgram {
        ground(&parse_program(text).unwrap().program).unwrap()
    }

    #[test]
    fn five_choice_points() {
        let gp = g("0.5::r. 0.6::r. 0.2::s(a). 0.3::s(X). v :- r, s(a), s(b).");
        assert_eq!(gp.choice_points().len(), 5);
        let ids: Vec<usize> = gp.choice_points().iter().map(|c| c.id).collect();
        assert_eq!(ids, vec![0, 1, 2, 3, 4]);
        let r = gp.lookup(&Atom::prop("r")).unwrap();
        assert_eq!(gp.choice_points()[0].atom, r);
        assert_eq!(gp.choice_points()[1].atom, r);
        let sa = gp.lookup(&Atom::ground("s", &["a"])).unwrap();
        assert_eq!(gp.choice_points()[3].atom, sa);
        assert_eq!(gp.choice_points()[3].prob, ratio(3, 10));
        assert_eq!(gp.rules().len(), 1);
    }

    #[test]
    fn smokers_influence_rule() {
        let gp = g(include_str!("../../fixtures/smokers.plp"));
        let texts: Vec<String> = gp.rules().iter().map(|r| gp.rule_text(r)).collect();
        assert!(texts.contains(&"smokes(a) :- influences(b,a), smokes(b).".to_string()), "{texts:?}");
        // stress(a) and influences(a,a) are never possibly true.
        assert!(gp.lookup(&Atom::ground("stress", &["a"])).is_none());
        assert!(gp.lookup(&Atom::ground("influences", &["a", "a"])).is_none());
    }

    #[test]
    fn nothing_possibly_true() {
        let gp = g("q :- p.");
        assert!(gp.rules().is_empty());
        assert!(gp.lookup(&Atom::prop("p")).is_none());
        assert!(gp.lookup(&Atom::prop("q")).is_none());
    }

    #[test]
    fn negative_only_variables_range_over_universe() {
        let gp = g("person(a). person(b). smokes(X) :- not stress(X).");
        assert_eq!(gp.rules().len(), 2);
        // stress is never possibly true, so the negative subgoals vanish.
        assert!(gp.rules().iter().all(|r| r.pos.is_empty() && r.neg.is_empty()));
    }

    #[test]
    fn reserved_constant() {
        let p = parse_program("0.5::a. b(X) :- a.").unwrap().program;
        assert_eq!(herbrand_universe(&p), vec!["u0".to_string()]);
        let gp = ground(&p).unwrap();
        assert!(gp.lookup(&Atom::ground("b", &["u0"])).is_some());
    }

    #[test]
    fn choice_atoms_always_interned() {
        let gp = g("0.5::lonely.");
        assert_eq!(gp.atom_count(), 1);
        assert!(gp.rules().is_empty());
    }

    #[test]
    fn resource_guard() {
        let p = parse_program("d(1). d(2). d(3). p(X,Y,Z) :- d(X), d(Y), d(Z).").unwrap().program;
        let err = ground_with(&p, GroundOptions { max_ground_rules: 10 }).unwrap_err();
        assert_eq!(err, GroundError::TooManyRules { limit: 10 });
        assert!(ground_with(&p, GroundOptions { max_ground_rules: 27 }).is_ok());
    }

    #[test]
    fn deterministic_dump() {
        let text = include_str!("../../fixtures/alarm.plp");
        assert_eq!(g(text).dump(), g(text).dump());
        assert!(g("0.5::r.").dump().contains("choice 0 atom 0 prob 1/2"));
    }
}
