use crate::ground::{AtomId, GroundProgram};
use crate::syntax::Truth;

/// Two-valued interpretation over every atom of a ground program.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation {
    truth: Vec<bool>,
}

impl Interpretation {
    pub fn all_false(atom_count: usize) -> Self {
        Interpretation { truth: vec![false; atom_count] }
    }

    pub fn from_bools(truth: Vec<bool>) -> Self {
        Interpretation { truth }
    }

    pub fn from_true_atoms(atom_count: usize, atoms: impl IntoIterator<Item = AtomId>) -> Self {
        let mut truth = vec![false; atom_count];
        for a in atoms {
            truth[a.index()] = true;
        }
        Interpretation { truth }
    }

    pub fn len(&self) -> usize {
        self.truth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.truth.is_empty()
    }

    #[inline]
    pub fn is_true(&self, a: AtomId) -> bool {
        self.truth[a.index()]
    }

    pub fn set(&mut self, a: AtomId, value: bool) {
        self.truth[a.index()] = value;
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.truth
    }

    pub fn true_atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.truth.iter().enumerate().filter(|(_, t)| **t).map(|(i, _)| AtomId(i as u32))
    }

    /// `atom=true|false` lines sorted by atom text.
    pub fn render(&self, g: &GroundProgram) -> String {
        let mut lines: Vec<String> =
            g.atom_ids().map(|a| format!("{}={}", g.atom(a), Truth::from_bool(self.is_true(a)))).collect();
        lines.sort();
        lines.join("\n")
    }
}

/// Three-valued interpretation over every atom of a ground program.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialInterpretation {
    truth: Vec<Truth>,
}

impl PartialInterpretation {
    pub fn from_truths(truth: Vec<Truth>) -> Self {
        PartialInterpretation { truth }
    }

    pub fn len(&self) -> usize {
        self.truth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.truth.is_empty()
    }

    #[inline]
    pub fn value(&self, a: AtomId) -> Truth {
        self.truth[a.index()]
    }

    pub fn truths(&self) -> &[Truth] {
        &self.truth
    }

    pub fn undefined_atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.atoms_with(Truth::Undefined)
    }

    pub fn atoms_with(&self, value: Truth) -> impl Iterator<Item = AtomId> + '_ {
        self.truth.iter().enumerate().filter(move |(_, t)| **t == value).map(|(i, _)| AtomId(i as u32))
    }

    pub fn is_total(&self) -> bool {
        self.truth.iter().all(|t| *t != Truth::Undefined)
    }

    /// The two-valued interpretation, if no atom is undefined.
    pub fn to_total(&self) -> Option<Interpretation> {
        self.truth.iter().map(|t| t.as_bool()).collect::<Option<Vec<bool>>>().map(Interpretation::from_bools)
    }

    /// Every decided literal agrees with `model`.
    pub fn is_contained_in(&self, model: &Interpretation) -> bool {
        self.truth.iter().enumerate().all(|(i, t)| match t.as_bool() {
            Some(v) => model.as_bools()[i] == v,
            None => true,
        })
    }

    pub fn render(&self, g: &GroundProgram) -> String {
        let mut lines: Vec<String> = g.atom_ids().map(|a| format!("{}={}", g.atom(a), self.value(a))).collect();
        lines.sort();
        lines.join("\n")
    }
}
