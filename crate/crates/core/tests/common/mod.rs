//! Shared helpers for the integration tests: fixture loading and a seeded
//! generator of small propositional programs and events.
#![allow(dead_code)]

use credal_plp::ground::{ground, GroundProgram};
use credal_plp::models::Event;
use credal_plp::syntax::{parse_program, parse_query, Assignments, Atom};
use rand::Rng;

pub const FIXTURES: &[(&str, &str)] = &[
    ("alarm", include_str!("../../fixtures/alarm.plp")),
    ("barber", include_str!("../../fixtures/barber.plp")),
    ("barber_logic", include_str!("../../fixtures/barber_logic.plp")),
    ("basic", include_str!("../../fixtures/basic.plp")),
    ("cases", include_str!("../../fixtures/cases.plp")),
    ("cold", include_str!("../../fixtures/cold.plp")),
    ("coloring", include_str!("../../fixtures/coloring.plp")),
    ("dilbert", include_str!("../../fixtures/dilbert.plp")),
    ("duplicates", include_str!("../../fixtures/duplicates.plp")),
    ("game", include_str!("../../fixtures/game.plp")),
    ("independence", include_str!("../../fixtures/independence.plp")),
    ("path", include_str!("../../fixtures/path.plp")),
    ("smokers", include_str!("../../fixtures/smokers.plp")),
    ("wins", include_str!("../../fixtures/wins.plp")),
];

pub fn fixture(name: &str) -> &'static str {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).expect("known fixture")
}

pub fn g(text: &str) -> GroundProgram {
    ground(&parse_program(text).expect("program parses").program).expect("program grounds")
}

pub fn q(text: &str) -> Assignments {
    parse_query(text).expect("query parses")
}

pub fn atom(text: &str) -> Atom {
    q(text).0.remove(0).0
}

pub fn ev(gp: &GroundProgram, text: &str) -> Event {
    Event::from_assignments(gp, &q(text)).expect("two-valued query")
}

const PROBS: &[&str] = &["1/2", "1/3", "1/4", "3/4", "0.2", "0.7", "0.9", "1", "0"];

/// A propositional program over `p0..p{n-1}` with at most `max_atoms` atoms,
/// `max_rules` rules and `max_choices` probabilistic facts.
pub fn random_program(rng: &mut impl Rng, max_atoms: usize, max_rules: usize, max_choices: usize) -> String {
    let n = rng.random_range(2..=max_atoms);
    let mut text = String::new();
    for _ in 0..rng.random_range(0..=max_choices) {
        let p = PROBS[rng.random_range(0..PROBS.len())];
        text.push_str(&format!("{p}::p{}.\n", rng.random_range(0..n)));
    }
    for _ in 0..rng.random_range(1..=max_rules) {
        let head = rng.random_range(0..n);
        let body: Vec<String> = (0..rng.random_range(0..=3))
            .map(|_| {
                let a = rng.random_range(0..n);
                if rng.random_bool(0.4) {
                    format!("not p{a}")
                } else {
                    format!("p{a}")
                }
            })
            .collect();
        if body.is_empty() {
            text.push_str(&format!("p{head}.\n"));
        } else {
            text.push_str(&format!("p{head} :- {}.\n", body.join(", ")));
        }
    }
    text
}

/// A random boolean combination of literals over `p0..p{atoms-1}`.
pub fn random_event(rng: &mut impl Rng, gp: &GroundProgram, atoms: usize, depth: usize) -> Event {
    if depth == 0 || rng.random_bool(0.35) {
        let a = Atom::prop(format!("p{}", rng.random_range(0..atoms)));
        return Event::lit(gp, &a, rng.random_bool(0.6));
    }
    let a = random_event(rng, gp, atoms, depth - 1);
    let b = random_event(rng, gp, atoms, depth - 1);
    match rng.random_range(0..3) {
        0 => a.and(b),
        1 => a.or(b),
        _ => a.negate(),
    }
}
