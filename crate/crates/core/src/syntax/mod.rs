//! Surface language: probabilistic facts `0.3::edge(1,2).`, normal rules with
//! default negation (`not` or `\+`), `%` line comments, and query strings of the
//! form `atom=true|false|undefined, ...`.

mod ast;
mod diag;
mod lexer;
mod parser;

pub use ast::{Assignments, Atom, ProbFact, Program, Query, Rule, Subgoal, Term, Truth};
pub use diag::{Diagnostic, Diagnostics, Level, Pos};
pub use parser::{format_program, parse_program, parse_query, unifies, Parsed, QueryError};
