use std::collections::HashMap;

use num_traits::{One, Zero};

use super::ast::{Assignments, Atom, ProbFact, Program, Rule, Subgoal, Term, Truth};
use super::diag::{Diagnostic, Diagnostics, Pos};
use super::lexer::{tokenize, Tok, Token};
use crate::prob::{self, Prob};

/// A successfully parsed program plus any warnings raised along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub program: Program,
    pub warnings: Vec<Diagnostic>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("{0}")]
    Syntax(Diagnostic),
    #[error("query atom `{0}` is not ground")]
    NonGround(Atom),
    #[error("unknown truth value `{0}` (expected true, false or undefined)")]
    UnknownTruth(String),
    #[error("conflicting assignments for `{0}`")]
    Conflict(Atom),
}

struct Cursor {
    toks: Vec<Token>,
    at: usize,
}

impl Cursor {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek_at(&self, n: usize) -> &Tok {
        &self.toks[(self.at + n).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Pos, Diagnostic> {
        let t = self.next();
        if t.tok == want {
            Ok(t.pos)
        } else {
            Err(unexpected(&t, what))
        }
    }
}

fn unexpected(t: &Token, what: &str) -> Diagnostic {
    Diagnostic::error(t.pos, format!("expected {what}, found {}", t.tok.describe()))
}

fn parse_term(cur: &mut Cursor) -> Result<Term, Diagnostic> {
    let t = cur.next();
    match t.tok {
        Tok::Ident(s) => Ok(Term::Constant(s)),
        Tok::Var(s) => Ok(Term::Variable(s)),
        Tok::Number(s) if s.bytes().all(|b| b.is_ascii_digit()) => Ok(Term::Constant(s)),
        _ => Err(unexpected(&t, "a term")),
    }
}

fn parse_atom(cur: &mut Cursor) -> Result<(Atom, Pos), Diagnostic> {
    let t = cur.next();
    let Tok::Ident(predicate) = t.tok else {
        return Err(unexpected(&t, "an atom"));
    };
    let mut args = Vec::new();
    if cur.peek().tok == Tok::LParen {
        cur.next();
        loop {
            args.push(parse_term(cur)?);
            let t = cur.next();
            match t.tok {
                Tok::Comma => continue,
                Tok::RParen => break,
                _ => return Err(unexpected(&t, "`,` or `)`")),
            }
        }
    }
    Ok((Atom { predicate, args }, t.pos))
}

fn parse_prob(cur: &mut Cursor) -> Result<(Prob, Pos), Diagnostic> {
    let t = cur.next();
    let Tok::Number(num) = &t.tok else {
        return Err(unexpected(&t, "a probability"));
    };
    let text = if cur.peek().tok == Tok::Slash {
        cur.next();
        let d = cur.next();
        let Tok::Number(den) = &d.tok else {
            return Err(unexpected(&d, "a denominator"));
        };
        format!("{num}/{den}")
    } else {
        num.clone()
    };
    let value = prob::parse_literal(&text)
        .ok_or_else(|| Diagnostic::error(t.pos, format!("malformed probability `{text}`")))?;
    Ok((value, t.pos))
}

enum Clause {
    Rule(Rule),
    Prob(ProbFact),
}

fn parse_clause(cur: &mut Cursor) -> Result<(Clause, Pos), Diagnostic> {
    let is_prob = matches!(cur.peek().tok, Tok::Number(_))
        && (matches!(cur.peek_at(1), Tok::ColonColon) || matches!(cur.peek_at(1), Tok::Slash));
    if is_prob {
        let (prob, pos) = parse_prob(cur)?;
        cur.expect(Tok::ColonColon, "`::`")?;
        let (atom, _) = parse_atom(cur)?;
        cur.expect(Tok::Dot, "`.`")?;
        return Ok((Clause::Prob(ProbFact { atom, prob }), pos));
    }
    let (head, pos) = parse_atom(cur)?;
    let mut body = Vec::new();
    let t = cur.next();
    match t.tok {
        Tok::Dot => {}
        Tok::If => loop {
            let negated = if cur.peek().tok == Tok::Not {
                cur.next();
                true
            } else {
                false
            };
            let (atom, _) = parse_atom(cur)?;
            body.push(Subgoal { atom, negated });
            let t = cur.next();
            match t.tok {
                Tok::Comma => continue,
                Tok::Dot => break,
                _ => return Err(unexpected(&t, "`,` or `.`")),
            }
        },
        _ => return Err(unexpected(&t, "`:-` or `.`")),
    }
    Ok((Clause::Rule(Rule { head, body }), pos))
}

/// Parses a program. Syntax errors stop at the first offending token; semantic
/// errors (probability range, arity clashes) are collected.
pub fn parse_program(text: &str) -> Result<Parsed, Diagnostics> {
    let toks = tokenize(text).map_err(|d| Diagnostics(vec![d]))?;
    let mut cur = Cursor { toks, at: 0 };
    let mut program = Program::default();
    let mut rule_pos = Vec::new();
    let mut prob_pos = Vec::new();
    let mut errors = Vec::new();

    while cur.peek().tok != Tok::Eof {
        let (clause, pos) = parse_clause(&mut cur).map_err(|d| Diagnostics(vec![d]))?;
        match clause {
            Clause::Rule(r) => {
                program.rules.push(r);
                rule_pos.push(pos);
            }
            Clause::Prob(pf) => {
                if pf.prob < Prob::zero() || pf.prob > Prob::one() {
                    errors.push(Diagnostic::error(
                        pos,
                        format!("probability {} out of range [0,1]", prob::format_literal(&pf.prob)),
                    ));
                }
                program.prob_facts.push(pf);
                prob_pos.push(pos);
            }
        }
    }

    // Arity must be fixed per predicate symbol.
    let mut arity: HashMap<String, usize> = HashMap::new();
    let mut check = |atom: &Atom, pos: Pos, errors: &mut Vec<Diagnostic>| match arity.get(atom.predicate.as_str()) {
        Some(&n) if n != atom.arity() => errors.push(Diagnostic::error(
            pos,
            format!("predicate `{}` used with arity {} but earlier with arity {}", atom.predicate, atom.arity(), n),
        )),
        Some(_) => {}
        None => {
            arity.insert(atom.predicate.clone(), atom.arity());
        }
    };
    for (pf, pos) in program.prob_facts.iter().zip(&prob_pos) {
        check(&pf.atom, *pos, &mut errors);
    }
    for (rule, pos) in program.rules.iter().zip(&rule_pos) {
        check(&rule.head, *pos, &mut errors);
        for goal in &rule.body {
            check(&goal.atom, *pos, &mut errors);
        }
    }
    if !errors.is_empty() {
        return Err(Diagnostics(errors));
    }

    let warnings = disjointness_warnings(&program, &prob_pos);
    Ok(Parsed { program, warnings })
}

fn disjointness_warnings(program: &Program, prob_pos: &[Pos]) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (pf, pos) in program.prob_facts.iter().zip(prob_pos) {
        for rule in &program.rules {
            if unifies(&pf.atom, &rule.head) {
                let kind = if rule.is_fact() { "fact" } else { "rule head" };
                out.push(Diagnostic::warning(
                    *pos,
                    format!(
                        "probabilistic fact `{}` unifies with {kind} `{}` (disjointness condition)",
                        pf.atom, rule.head
                    ),
                ));
            }
        }
    }
    out
}

/// Unification after renaming the two atoms' variables apart.
pub fn unifies(a: &Atom, b: &Atom) -> bool {
    if a.predicate != b.predicate || a.arity() != b.arity() {
        return false;
    }
    // Variables are keyed by (side, name); bindings chase to a representative.
    let mut binding: HashMap<(u8, &str), Key> = HashMap::new();
    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Key<'a> {
        Var(u8, &'a str),
        Const(&'a str),
    }
    fn resolve<'a>(binding: &HashMap<(u8, &'a str), Key<'a>>, mut k: Key<'a>) -> Key<'a> {
        while let Key::Var(side, name) = k {
            match binding.get(&(side, name)) {
                Some(next) => k = *next,
                None => break,
            }
        }
        k
    }
    fn key(side: u8, t: &Term) -> Key<'_> {
        match t {
            Term::Constant(c) => Key::Const(c.as_str()),
            Term::Variable(v) => Key::Var(side, v.as_str()),
        }
    }
    for (x, y) in a.args.iter().zip(&b.args) {
        let x = resolve(&binding, key(0, x));
        let y = resolve(&binding, key(1, y));
        match (x, y) {
            _ if x == y => {}
            (Key::Var(s, n), other) | (other, Key::Var(s, n)) => {
                binding.insert((s, n), other);
            }
            (Key::Const(_), Key::Const(_)) => return false,
        }
    }
    true
}

/// Parses `atom=value, atom=value, ...`; a bare atom means `=true`.
pub fn parse_query(text: &str) -> Result<Assignments, QueryError> {
    let toks = tokenize(text).map_err(QueryError::Syntax)?;
    let mut cur = Cursor { toks, at: 0 };
    let mut out: Vec<(Atom, Truth)> = Vec::new();
    if cur.peek().tok == Tok::Eof {
        return Ok(Assignments(out));
    }
    loop {
        let (atom, _) = parse_atom(&mut cur).map_err(QueryError::Syntax)?;
        if !atom.is_ground() {
            return Err(QueryError::NonGround(atom));
        }
        let value = if cur.peek().tok == Tok::Eq {
            cur.next();
            let t = cur.next();
            match &t.tok {
                Tok::Ident(w) if w == "true" => Truth::True,
                Tok::Ident(w) if w == "false" => Truth::False,
                Tok::Ident(w) if w == "undefined" => Truth::Undefined,
                Tok::Ident(w) | Tok::Var(w) | Tok::Number(w) => return Err(QueryError::UnknownTruth(w.clone())),
                _ => return Err(QueryError::Syntax(unexpected(&t, "a truth value"))),
            }
        } else {
            Truth::True
        };
        match out.iter().find(|(a, _)| *a == atom) {
            Some((_, v)) if *v != value => return Err(QueryError::Conflict(atom)),
            Some(_) => {}
            None => out.push((atom, value)),
        }
        let t = cur.next();
        match t.tok {
            Tok::Comma => continue,
            Tok::Eof => break,
            _ => return Err(QueryError::Syntax(unexpected(&t, "`,` or end of query"))),
        }
    }
    Ok(Assignments(out))
}

/// Canonical program text; re-parsing it yields a structurally equal program.
pub fn format_program(program: &Program) -> String {
    program.to_string()
}
