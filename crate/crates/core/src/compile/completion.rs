use std::fmt;

use super::CompileError;
use crate::ground::{classify, dependency_graph, AtomId, ClassKind, GroundProgram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Literal {
    pub atom: AtomId,
    pub positive: bool,
}

/// `atom ⇔ fact ∨ (some listed choice point kept) ∨ (some body holds)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub atom: AtomId,
    pub fact: bool,
    /// Choice points on this atom; each becomes an auxiliary root node.
    pub choices: Vec<usize>,
    /// One conjunction per rule with this head.
    pub bodies: Vec<Vec<Literal>>,
}

impl Definition {
    pub fn is_false(&self) -> bool {
        !self.fact && self.choices.is_empty() && self.bodies.is_empty()
    }

    /// Evaluates the right-hand side; `choice_kept` and `value` supply the
    /// truth of auxiliary choice nodes and body atoms.
    pub fn eval(&self, choice_kept: impl Fn(usize) -> bool, value: impl Fn(AtomId) -> bool) -> bool {
        self.fact
            || self.choices.iter().any(|c| choice_kept(*c))
            || self.bodies.iter().any(|body| body.iter().all(|l| value(l.atom) == l.positive))
    }
}

/// Clark completion of an acyclic ground program. Atoms carrying exactly one
/// choice point and nothing else are roots and get no definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub definitions: Vec<Definition>,
}

impl Completion {
    pub fn get(&self, atom: AtomId) -> Option<&Definition> {
        self.definitions.iter().find(|d| d.atom == atom)
    }

    pub fn render(&self, g: &GroundProgram) -> String {
        let mut out = String::new();
        for d in &self.definitions {
            out.push_str(&format!("{}\n", DisplayDef { g, d }));
        }
        out
    }
}

struct DisplayDef<'a> {
    g: &'a GroundProgram,
    d: &'a Definition,
}

impl fmt::Display for DisplayDef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let DisplayDef { g, d } = self;
        write!(f, "{} <=> ", g.atom(d.atom))?;
        if d.fact {
            return f.write_str("true");
        }
        if d.is_false() {
            return f.write_str("false");
        }
        let mut disjuncts: Vec<String> = d.choices.iter().map(|c| super::aux_name(g, *c)).collect();
        for body in &d.bodies {
            let lits: Vec<String> = body
                .iter()
                .map(|l| if l.positive { g.atom(l.atom).to_string() } else { format!("~{}", g.atom(l.atom)) })
                .collect();
            disjuncts.push(match lits.len() {
                0 => "true".to_string(),
                1 => lits[0].clone(),
                _ => format!("({})", lits.join(" & ")),
            });
        }
        f.write_str(&disjuncts.join(" | "))
    }
}

/// An atom that becomes a plain root node.
pub(crate) fn is_root_atom(g: &GroundProgram, atom: AtomId) -> bool {
    !g.is_fact(atom)
        && g.choice_points().iter().filter(|cp| cp.atom == atom).count() == 1
        && !g.rules().iter().any(|r| r.head == atom)
}

pub fn clark_completion(g: &GroundProgram) -> Result<Completion, CompileError> {
    let class = classify(&dependency_graph(g));
    if class.kind != ClassKind::Acyclic {
        let cycle = class.witness.unwrap_or_default().iter().map(|a| g.atom(*a).to_string()).collect();
        return Err(CompileError::NotAcyclic { cycle });
    }
    let mut definitions = Vec::new();
    for atom in g.atom_ids() {
        if is_root_atom(g, atom) {
            continue;
        }
        let choices = g.choice_points().iter().filter(|cp| cp.atom == atom).map(|cp| cp.id).collect();
        let bodies = g
            .rules()
            .iter()
            .filter(|r| r.head == atom)
            .map(|r| {
                let pos = r.pos.iter().map(|a| Literal { atom: *a, positive: true });
                let neg = r.neg.iter().map(|a| Literal { atom: *a, positive: false });
                pos.chain(neg).collect()
            })
            .collect();
        definitions.push(Definition { atom, fact: g.is_fact(atom), choices, bodies });
    }
    Ok(Completion { definitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::ground;
    use crate::syntax::{parse_program, Atom};

    fn g(text: &str) -> GroundProgram {
        ground(&parse_program(text).unwrap().program).unwrap()
    }

    #[test]
    fn alarm_definition() {
        let gp = g(include_str!("../../fixtures/alarm.plp"));
        let c = clark_completion(&gp).unwrap();
        let alarm = gp.lookup(&Atom::prop("alarm")).unwrap();
        let line = DisplayDef { g: &gp, d: c.get(alarm).unwrap() }.to_string();
        assert_eq!(
            line,
            "alarm <=> (burglary & earthquake & a1) | (burglary & a2 & ~earthquake) | (earthquake & a3 & ~burglary)"
        );
        let burglary = gp.lookup(&Atom::prop("burglary")).unwrap();
        assert!(c.get(burglary).is_none());
    }

    #[test]
    fn facts_and_empty_definitions() {
        let gp = GroundProgram::builder();
        let mut b = gp;
        let f = b.prop("f");
        let n = b.prop("n");
        b.fact(f);
        let gp = b.build();
        let c = clark_completion(&gp).unwrap();
        assert_eq!(c.render(&gp), "f <=> true\nn <=> false\n");
        assert!(c.get(n).unwrap().is_false());
    }

    #[test]
    fn duplicate_choices_get_auxiliaries() {
        let gp = g(include_str!("../../fixtures/duplicates.plp"));
        let c = clark_completion(&gp).unwrap();
        let r = gp.lookup(&Atom::prop("r")).unwrap();
        assert_eq!(DisplayDef { g: &gp, d: c.get(r).unwrap() }.to_string(), "r <=> r#0 | r#1");
    }

    #[test]
    fn rejects_cycles() {
        let gp = g(include_str!("../../fixtures/smokers.plp"));
        assert!(matches!(clark_completion(&gp), Err(CompileError::NotAcyclic { .. })));
    }
}
