use super::interp::Interpretation;
use crate::ground::{AtomId, GroundProgram};
use crate::syntax::{Assignments, Atom, Truth};

/// A boolean combination of ground literals, evaluated on two-valued models.
///
/// Literal atoms missing from the atom table are `None` and read as false,
/// which is their value in every model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Const(bool),
    Lit { atom: Option<AtomId>, value: bool },
    Not(Box<Event>),
    And(Vec<Event>),
    Or(Vec<Event>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EventError {
    #[error("`{0}=undefined` is only meaningful under the well-founded semantics")]
    Undefined(Atom),
}

impl Event {
    pub fn tautology() -> Self {
        Event::Const(true)
    }

    pub fn contradiction() -> Self {
        Event::Const(false)
    }

    pub fn lit(g: &GroundProgram, atom: &Atom, value: bool) -> Self {
        Event::Lit { atom: g.lookup(atom), value }
    }

    pub fn atom(id: AtomId, value: bool) -> Self {
        Event::Lit { atom: Some(id), value }
    }

    pub fn negate(self) -> Self {
        Event::Not(Box::new(self))
    }

    pub fn and(self, other: Event) -> Self {
        Event::And(vec![self, other])
    }

    pub fn or(self, other: Event) -> Self {
        Event::Or(vec![self, other])
    }

    /// Conjunction of two-valued assignments; the empty set is a tautology.
    pub fn from_assignments(g: &GroundProgram, assignments: &Assignments) -> Result<Self, EventError> {
        let lits = assignments
            .iter()
            .map(|(atom, truth)| match truth.as_bool() {
                Some(v) => Ok(Event::lit(g, atom, v)),
                None => Err(EventError::Undefined(atom.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Event::And(lits))
    }

    pub fn holds(&self, model: &Interpretation) -> bool {
        match self {
            Event::Const(b) => *b,
            Event::Lit { atom, value } => atom.is_some_and(|a| model.is_true(a)) == *value,
            Event::Not(e) => !e.holds(model),
            Event::And(es) => es.iter().all(|e| e.holds(model)),
            Event::Or(es) => es.iter().any(|e| e.holds(model)),
        }
    }
}

/// Query atoms absent from the ground program, for warnings.
pub fn unresolved_atoms(g: &GroundProgram, assignments: &Assignments) -> Vec<Atom> {
    assignments.iter().filter(|(a, _)| g.lookup(a).is_none()).map(|(a, _)| a.clone()).collect()
}

/// Three-valued match of every assignment; absent atoms are false.
pub fn matches_three_valued(g: &GroundProgram, assignments: &Assignments, value_of: impl Fn(AtomId) -> Truth) -> bool {
    assignments.iter().all(|(atom, want)| {
        let got = g.lookup(atom).map_or(Truth::False, &value_of);
        got == *want
    })
}
