//! Grounding, the grounded dependency graph and program classification.

mod graph;
mod grounder;
mod program;

pub use graph::{classify, dependency_graph, ClassKind, DependencyGraph, Edge, ProgramClass, Sign};
pub use grounder::{
    ground, ground_with, herbrand_universe, GroundError, GroundOptions, DEFAULT_MAX_GROUND_RULES, RESERVED_CONSTANT,
};
pub use program::{AtomId, AtomTable, ChoicePoint, GroundDump, GroundProgram, GroundProgramBuilder, GroundRule};
