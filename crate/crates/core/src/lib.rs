//! Exact inference for probabilistic normal logic programs.
//!
//! A program is a set of normal rules plus independent probabilistic facts
//! `α::atom.`. Each keep/discard decision over the ground probabilistic facts
//! (a *total choice*) yields an ordinary normal logic program. This crate
//! answers queries over that family under two semantics:
//!
//! * **credal**: every total choice must have at least one stable model; the
//!   answer is an interval `[lower, upper]` obtained from cautious and brave
//!   reasoning per total choice;
//! * **well-founded**: each total choice contributes its unique three-valued
//!   well-founded model, so atoms may be `undefined` with some probability.
//!
//! Acyclic programs can also be compiled to a Bayesian network, which gives an
//! independent route to the same numbers.
//!
//! ```
//! use credal_plp::{ground, infer, syntax};
//!
//! let program = syntax::parse_program("0.5::r. 0.5::s. v :- r, s.").unwrap().program;
//! let g = ground::ground(&program).unwrap();
//! let q = syntax::parse_query("v").unwrap();
//! let event = credal_plp::models::Event::from_assignments(&g, &q).unwrap();
//! let interval = infer::credal_unconditional(&g, &event, &infer::Limits::default()).unwrap();
//! assert_eq!(interval.lower, credal_plp::prob::ratio(1, 4));
//! assert_eq!(interval.upper, credal_plp::prob::ratio(1, 4));
//! ```

pub mod cli;
pub mod compile;
pub mod ground;
pub mod infer;
pub mod models;
pub mod prob;
pub mod syntax;
