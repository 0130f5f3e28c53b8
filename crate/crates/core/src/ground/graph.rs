use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::program::{AtomId, GroundProgram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

/// `from` occurs in the body of a rule with head `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Edge {
    pub from: AtomId,
    pub to: AtomId,
    pub sign: Sign,
}

/// Grounded dependency graph over all atoms of a ground program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyGraph {
    pub node_count: usize,
    pub edges: BTreeSet<Edge>,
}

impl DependencyGraph {
    pub fn has_edge(&self, from: AtomId, to: AtomId) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    pub fn has_signed_edge(&self, from: AtomId, to: AtomId, sign: Sign) -> bool {
        self.edges.contains(&Edge { from, to, sign })
    }

    fn successors(&self) -> Vec<Vec<(AtomId, Sign)>> {
        let mut succ = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            succ[e.from.index()].push((e.to, e.sign));
        }
        succ
    }

    /// Node lists of the strongly connected components.
    pub fn components(&self) -> Vec<Vec<AtomId>> {
        let mut graph: DiGraph<AtomId, ()> = DiGraph::with_capacity(self.node_count, self.edges.len());
        let nodes: Vec<NodeIndex> = (0..self.node_count as u32).map(|i| graph.add_node(AtomId(i))).collect();
        for e in &self.edges {
            graph.update_edge(nodes[e.from.index()], nodes[e.to.index()], ());
        }
        tarjan_scc(&graph)
            .into_iter()
            .map(|scc| {
                let mut ids: Vec<AtomId> = scc.into_iter().map(|n| graph[n]).collect();
                ids.sort();
                ids
            })
            .collect()
    }

    /// Checks that `cycle` is a closed walk: each atom has an edge to the next
    /// one, and the last back to the first.
    pub fn verifies_cycle(&self, cycle: &[AtomId]) -> bool {
        !cycle.is_empty() && cycle.iter().enumerate().all(|(i, a)| self.has_edge(*a, cycle[(i + 1) % cycle.len()]))
    }

    pub fn cycle_has_negative_edge(&self, cycle: &[AtomId]) -> bool {
        cycle.iter().enumerate().any(|(i, a)| self.has_signed_edge(*a, cycle[(i + 1) % cycle.len()], Sign::Negative))
    }
}

pub fn dependency_graph(g: &GroundProgram) -> DependencyGraph {
    let mut edges = BTreeSet::new();
    for rule in g.rules() {
        for b in &rule.pos {
            edges.insert(Edge { from: *b, to: rule.head, sign: Sign::Positive });
        }
        for b in &rule.neg {
            edges.insert(Edge { from: *b, to: rule.head, sign: Sign::Negative });
        }
    }
    DependencyGraph { node_count: g.atom_count(), edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Acyclic,
    Stratified,
    General,
}

impl ClassKind {
    /// Stratified programs (acyclic ones included) have a single total model
    /// per total choice.
    pub fn is_stratified(self) -> bool {
        self != ClassKind::General
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Acyclic => "acyclic",
            ClassKind::Stratified => "stratified",
            ClassKind::General => "general",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgramClass {
    pub kind: ClassKind,
    /// For stratified programs a cycle; for general ones a cycle through a
    /// negative edge. `None` for acyclic programs.
    pub witness: Option<Vec<AtomId>>,
}

/// Acyclic iff no directed cycle; stratified iff no strongly connected
/// component contains a negative edge between two of its members.
pub fn classify(dg: &DependencyGraph) -> ProgramClass {
    let components = dg.components();
    let mut comp_of = vec![usize::MAX; dg.node_count];
    for (c, members) in components.iter().enumerate() {
        for a in members {
            comp_of[a.index()] = c;
        }
    }
    let succ = dg.successors();

    // A cycle through a negative edge inside one component.
    for e in &dg.edges {
        if e.sign == Sign::Negative && comp_of[e.from.index()] == comp_of[e.to.index()] {
            let mut cycle = vec![e.from];
            cycle.extend(path_within(&succ, &comp_of, e.to, e.from));
            cycle.pop();
            return ProgramClass { kind: ClassKind::General, witness: Some(rotate_to_min(cycle)) };
        }
    }
    // Any cycle at all: a self-loop or an edge inside a non-trivial component.
    for e in &dg.edges {
        if comp_of[e.from.index()] == comp_of[e.to.index()] {
            let mut cycle = vec![e.from];
            cycle.extend(path_within(&succ, &comp_of, e.to, e.from));
            cycle.pop();
            return ProgramClass { kind: ClassKind::Stratified, witness: Some(rotate_to_min(cycle)) };
        }
    }
    ProgramClass { kind: ClassKind::Acyclic, witness: None }
}

/// BFS path `start ..= goal` staying inside `start`'s component.
fn path_within(succ: &[Vec<(AtomId, Sign)>], comp_of: &[usize], start: AtomId, goal: AtomId) -> Vec<AtomId> {
    let comp = comp_of[start.index()];
    let mut parent: Vec<Option<AtomId>> = vec![None; succ.len()];
    let mut visited = vec![false; succ.len()];
    let mut queue = VecDeque::from([start]);
    visited[start.index()] = true;
    while let Some(a) = queue.pop_front() {
        if a == goal {
            let mut path = vec![a];
            let mut cur = a;
            while let Some(p) = parent[cur.index()] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return path;
        }
        for (b, _) in &succ[a.index()] {
            if comp_of[b.index()] == comp && !visited[b.index()] {
                visited[b.index()] = true;
                parent[b.index()] = Some(a);
                queue.push_back(*b);
            }
        }
    }
    unreachable!("atoms of one strongly connected component reach each other")
}

fn rotate_to_min(mut cycle: Vec<AtomId>) -> Vec<AtomId> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, a)| **a).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}
