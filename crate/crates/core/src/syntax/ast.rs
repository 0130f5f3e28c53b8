use std::fmt;

use crate::prob::{self, Prob};

/// A constant or a logical variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Constant(String),
    Variable(String),
}

impl Term {
    pub fn constant(name: impl Into<String>) -> Self {
        Term::Constant(name.into())
    }

    pub fn variable(name: impl Into<String>) -> Self {
        Term::Variable(name.into())
    }

    pub fn is_variable(&self) -> bool {
        matches!(self, Term::Variable(_))
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Constant(n) | Term::Variable(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom { predicate: predicate.into(), args }
    }

    /// A zero-arity atom.
    pub fn prop(predicate: impl Into<String>) -> Self {
        Atom::new(predicate, Vec::new())
    }

    /// Ground atom over the given constants.
    pub fn ground(predicate: impl Into<String>, constants: &[&str]) -> Self {
        Atom::new(predicate, constants.iter().map(|c| Term::constant(*c)).collect())
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_variable())
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter(|t| t.is_variable()).map(Term::name)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, arg) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{arg}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A body element: an atom, possibly under default negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgoal {
    pub atom: Atom,
    pub negated: bool,
}

impl Subgoal {
    pub fn pos(atom: Atom) -> Self {
        Subgoal { atom, negated: false }
    }

    pub fn neg(atom: Atom) -> Self {
        Subgoal { atom, negated: true }
    }
}

impl fmt::Display for Subgoal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "not {}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// `head :- body.`; an empty body makes it a fact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: Atom,
    pub body: Vec<Subgoal>,
}

impl Rule {
    pub fn fact(head: Atom) -> Self {
        Rule { head, body: Vec::new() }
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }

    pub fn variables(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        let atoms = std::iter::once(&self.head).chain(self.body.iter().map(|s| &s.atom));
        for v in atoms.flat_map(Atom::variables) {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (i, goal) in self.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{goal}")?;
            }
        }
        f.write_str(".")
    }
}

/// `prob::atom.`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProbFact {
    pub atom: Atom,
    pub prob: Prob,
}

impl fmt::Display for ProbFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}::{}.", prob::format_literal(&self.prob), self.atom)
    }
}

/// A normal logic program together with its probabilistic facts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub rules: Vec<Rule>,
    pub prob_facts: Vec<ProbFact>,
}

impl Program {
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty() && self.prob_facts.is_empty()
    }

    pub fn is_definite(&self) -> bool {
        self.rules.iter().all(|r| r.body.iter().all(|g| !g.negated))
    }

    /// Constants in order of first appearance (probabilistic facts first, then
    /// rules, matching the printed order).
    pub fn constants(&self) -> Vec<String> {
        let mut seen: Vec<String> = Vec::new();
        let atoms = self
            .prob_facts
            .iter()
            .map(|pf| &pf.atom)
            .chain(self.rules.iter().flat_map(|r| std::iter::once(&r.head).chain(r.body.iter().map(|g| &g.atom))));
        for atom in atoms {
            for term in &atom.args {
                if let Term::Constant(c) = term {
                    if !seen.iter().any(|s| s == c) {
                        seen.push(c.clone());
                    }
                }
            }
        }
        seen
    }
}

/// Canonical text: probabilistic facts first, then rules, one clause per line.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pf in &self.prob_facts {
            writeln!(f, "{pf}")?;
        }
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// Three-valued truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Undefined,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Truth::True => Some(true),
            Truth::False => Some(false),
            Truth::Undefined => None,
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Undefined => "undefined",
        })
    }
}

/// A set of truth assignments to ground atoms, read as a conjunction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignments(pub Vec<(Atom, Truth)>);

impl Assignments {
    pub fn new() -> Self {
        Assignments(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Atom, Truth)> {
        self.0.iter()
    }

    pub fn mentions_undefined(&self) -> bool {
        self.0.iter().any(|(_, t)| *t == Truth::Undefined)
    }

    pub fn with(mut self, atom: Atom, value: Truth) -> Self {
        self.0.push((atom, value));
        self
    }
}

impl fmt::Display for Assignments {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{atom}={value}")?;
        }
        Ok(())
    }
}

/// Query assignments `q` and (possibly empty) evidence `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Query {
    pub q: Assignments,
    pub e: Assignments,
}

impl Query {
    pub fn new(q: Assignments, e: Assignments) -> Self {
        Query { q, e }
    }
}
