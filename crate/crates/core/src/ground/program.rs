use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::prob::{self, Prob};
use crate::syntax::Atom;

/// Dense index of a ground atom inside a [`GroundProgram`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct AtomId(pub u32);

impl AtomId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bijection between ground atoms and [`AtomId`]s, in creation order.
#[derive(Clone, Debug, Default)]
pub struct AtomTable {
    atoms: Vec<Atom>,
    index: HashMap<Atom, AtomId>,
}

impl AtomTable {
    pub fn intern(&mut self, atom: Atom) -> AtomId {
        if let Some(&id) = self.index.get(&atom) {
            return id;
        }
        let id = AtomId(self.atoms.len() as u32);
        self.index.insert(atom.clone(), id);
        self.atoms.push(atom);
        id
    }

    pub fn get(&self, atom: &Atom) -> Option<AtomId> {
        self.index.get(atom).copied()
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        &self.atoms[id.index()]
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AtomId, &Atom)> {
        self.atoms.iter().enumerate().map(|(i, a)| (AtomId(i as u32), a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundRule {
    pub head: AtomId,
    pub pos: Vec<AtomId>,
    pub neg: Vec<AtomId>,
}

impl GroundRule {
    pub fn new(head: AtomId, pos: Vec<AtomId>, neg: Vec<AtomId>) -> Self {
        GroundRule { head, pos, neg }
    }
}

/// One grounded probabilistic fact instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoicePoint {
    pub id: usize,
    pub atom: AtomId,
    pub prob: Prob,
}

/// Rules plus the positive-occurrence index every fixpoint routine walks.
#[derive(Debug)]
pub(crate) struct RuleSet {
    pub(crate) rules: Vec<GroundRule>,
    /// atom -> rules with the atom in their positive body (once per rule).
    pub(crate) pos_occ: Vec<Vec<u32>>,
    /// atom -> rules with the atom in their negative body (once per rule).
    pub(crate) neg_occ: Vec<Vec<u32>>,
    /// Distinct positive body atoms per rule.
    pub(crate) pos_len: Vec<u32>,
}

impl RuleSet {
    fn new(mut rules: Vec<GroundRule>, atom_count: usize) -> Self {
        let mut pos_occ = vec![Vec::new(); atom_count];
        let mut neg_occ = vec![Vec::new(); atom_count];
        let mut pos_len = Vec::with_capacity(rules.len());
        for (r, rule) in rules.iter_mut().enumerate() {
            dedup_in_place(&mut rule.pos);
            dedup_in_place(&mut rule.neg);
            for a in &rule.pos {
                pos_occ[a.index()].push(r as u32);
            }
            for a in &rule.neg {
                neg_occ[a.index()].push(r as u32);
            }
            pos_len.push(rule.pos.len() as u32);
        }
        RuleSet { rules, pos_occ, neg_occ, pos_len }
    }
}

fn dedup_in_place(ids: &mut Vec<AtomId>) {
    let mut seen = Vec::with_capacity(ids.len());
    ids.retain(|a| {
        if seen.contains(a) {
            false
        } else {
            seen.push(*a);
            true
        }
    });
}

/// An interned ground program: the shared part (atoms, rules, choice points)
/// sits behind `Arc`s, so deriving the program for one total choice only
/// copies the fact set.
#[derive(Clone, Debug)]
pub struct GroundProgram {
    atoms: Arc<AtomTable>,
    rules: Arc<RuleSet>,
    choice_points: Arc<Vec<ChoicePoint>>,
    facts: Vec<bool>,
}

impl GroundProgram {
    pub fn builder() -> GroundProgramBuilder {
        GroundProgramBuilder::default()
    }

    pub fn atom_table(&self) -> &AtomTable {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom(&self, id: AtomId) -> &Atom {
        self.atoms.atom(id)
    }

    pub fn lookup(&self, atom: &Atom) -> Option<AtomId> {
        self.atoms.get(atom)
    }

    pub fn atom_ids(&self) -> impl Iterator<Item = AtomId> {
        (0..self.atoms.len() as u32).map(AtomId)
    }

    pub fn rules(&self) -> &[GroundRule] {
        &self.rules.rules
    }

    pub fn choice_points(&self) -> &[ChoicePoint] {
        &self.choice_points
    }

    pub fn is_fact(&self, id: AtomId) -> bool {
        self.facts[id.index()]
    }

    pub fn fact_atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.facts.iter().enumerate().filter(|(_, f)| **f).map(|(i, _)| AtomId(i as u32))
    }

    pub(crate) fn fact_mask(&self) -> &[bool] {
        &self.facts
    }

    pub(crate) fn rule_set(&self) -> &RuleSet {
        &self.rules
    }

    pub fn is_definite(&self) -> bool {
        self.rules.rules.iter().all(|r| r.neg.is_empty())
    }

    pub fn is_choice_atom(&self, id: AtomId) -> bool {
        self.choice_points.iter().any(|c| c.atom == id)
    }

    /// Same atoms and choice points, different rules.
    pub fn with_rules(&self, rules: Vec<GroundRule>) -> GroundProgram {
        GroundProgram {
            atoms: Arc::clone(&self.atoms),
            rules: Arc::new(RuleSet::new(rules, self.atoms.len())),
            choice_points: Arc::clone(&self.choice_points),
            facts: self.facts.clone(),
        }
    }

    /// Same rules, with `extra` atoms added as facts.
    pub fn with_extra_facts(&self, extra: impl IntoIterator<Item = AtomId>) -> GroundProgram {
        let mut facts = self.facts.clone();
        for a in extra {
            facts[a.index()] = true;
        }
        GroundProgram {
            atoms: Arc::clone(&self.atoms),
            rules: Arc::clone(&self.rules),
            choice_points: Arc::clone(&self.choice_points),
            facts,
        }
    }

    /// Text dump: one line per atom, fact, rule and choice point, in id order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (id, atom) in self.atoms.iter() {
            out.push_str(&format!("atom {id} {atom}\n"));
        }
        for id in self.fact_atoms() {
            out.push_str(&format!("fact {id}\n"));
        }
        for rule in self.rules() {
            let ids = |v: &[AtomId]| v.iter().map(|a| format!(" {a}")).collect::<String>();
            out.push_str(&format!("rule {} pos{} neg{}\n", rule.head, ids(&rule.pos), ids(&rule.neg)));
        }
        for cp in self.choice_points() {
            out.push_str(&format!("choice {} atom {} prob {}\n", cp.id, cp.atom, prob::format_fraction(&cp.prob)));
        }
        out
    }

    /// Human-readable rules, e.g. `smokes(a) :- influences(b,a), smokes(b).`
    pub fn rule_text(&self, rule: &GroundRule) -> String {
        let mut body: Vec<String> = rule.pos.iter().map(|a| self.atom(*a).to_string()).collect();
        body.extend(rule.neg.iter().map(|a| format!("not {}", self.atom(*a))));
        if body.is_empty() {
            format!("{}.", self.atom(rule.head))
        } else {
            format!("{} :- {}.", self.atom(rule.head), body.join(", "))
        }
    }
}

/// Machine-readable form of [`GroundProgram::dump`].
#[derive(Debug, serde::Serialize)]
pub struct GroundDump {
    pub atoms: Vec<(AtomId, String)>,
    pub facts: Vec<AtomId>,
    pub rules: Vec<(AtomId, Vec<AtomId>, Vec<AtomId>)>,
    pub choices: Vec<(usize, AtomId, String)>,
}

impl From<&GroundProgram> for GroundDump {
    fn from(g: &GroundProgram) -> Self {
        GroundDump {
            atoms: g.atoms.iter().map(|(id, a)| (id, a.to_string())).collect(),
            facts: g.fact_atoms().collect(),
            rules: g.rules().iter().map(|r| (r.head, r.pos.clone(), r.neg.clone())).collect(),
            choices: g.choice_points().iter().map(|c| (c.id, c.atom, prob::format_fraction(&c.prob))).collect(),
        }
    }
}

/// Assembles a [`GroundProgram`] directly, without going through the grounder.
#[derive(Default)]
pub struct GroundProgramBuilder {
    atoms: AtomTable,
    rules: Vec<GroundRule>,
    choices: Vec<(AtomId, Prob)>,
    facts: Vec<AtomId>,
}

impl GroundProgramBuilder {
    pub fn atom(&mut self, atom: Atom) -> AtomId {
        self.atoms.intern(atom)
    }

    /// Zero-arity atom by name.
    pub fn prop(&mut self, name: &str) -> AtomId {
        self.atoms.intern(Atom::prop(name))
    }

    pub fn rule(&mut self, head: AtomId, pos: Vec<AtomId>, neg: Vec<AtomId>) -> &mut Self {
        self.rules.push(GroundRule { head, pos, neg });
        self
    }

    pub fn fact(&mut self, atom: AtomId) -> &mut Self {
        self.facts.push(atom);
        self
    }

    pub fn choice(&mut self, atom: AtomId, prob: Prob) -> &mut Self {
        self.choices.push((atom, prob));
        self
    }

    pub fn build(self) -> GroundProgram {
        let n = self.atoms.len();
        let mut facts = vec![false; n];
        for a in self.facts {
            facts[a.index()] = true;
        }
        let choice_points =
            self.choices.into_iter().enumerate().map(|(id, (atom, prob))| ChoicePoint { id, atom, prob }).collect();
        GroundProgram {
            rules: Arc::new(RuleSet::new(self.rules, n)),
            atoms: Arc::new(self.atoms),
            choice_points: Arc::new(choice_points),
            facts,
        }
    }
}
