//! Clark completion of acyclic programs and their Bayesian networks.
//!
//! Every choice point becomes a root node carrying its probability. An atom
//! whose only source is a single choice point is that root; otherwise each of
//! its choice points gets an auxiliary root named `atom#id` and the atom itself
//! is a deterministic node over its completion.

mod bn;
mod completion;
mod export;

pub use bn::{
    bn_query, compile_bn, BayesNet, BnNode, CompileOptions, NodeKind, DEFAULT_MAX_PARENTS, DEFAULT_MAX_ROOTS,
};
pub use completion::{clark_completion, Completion, Definition, Literal};
pub use export::{export_bn, import_bn, ImportError};

use crate::ground::GroundProgram;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error("program is not acyclic (cycle through {})", cycle.join(", "))]
    NotAcyclic { cycle: Vec<String> },
    #[error("node `{node}` has {parents} parents, more than the limit of {limit}")]
    TooManyParents { node: String, parents: usize, limit: usize },
    #[error("network has {roots} root nodes, more than the limit of {limit}")]
    TooManyRoots { limit: usize, roots: usize },
}

pub(crate) fn aux_name(g: &GroundProgram, choice: usize) -> String {
    format!("{}#{}", g.atom(g.choice_points()[choice].atom), choice)
}
