use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use super::completion::{clark_completion, is_root_atom};
use super::{aux_name, CompileError};
use crate::ground::{AtomId, GroundProgram};
use crate::infer::Conditional;
use crate::prob::{self, Prob};
use crate::syntax::{Assignments, Truth};

pub const DEFAULT_MAX_PARENTS: usize = 16;
pub const DEFAULT_MAX_ROOTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompileOptions {
    pub max_parents: usize,
    /// Roots are enumerated jointly by [`bn_query`].
    pub max_roots: usize,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { max_parents: DEFAULT_MAX_PARENTS, max_roots: DEFAULT_MAX_ROOTS }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Root,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnNode {
    pub name: String,
    pub kind: NodeKind,
    /// Indices of earlier nodes.
    pub parents: Vec<usize>,
    /// `P(node = true | parents)`, one row per parent configuration. Row `r`
    /// gives parent `j` the value of bit `k-1-j` of `r`, so rows are in the
    /// order of their bit strings with the first parent leftmost.
    pub table: Vec<Prob>,
}

impl BnNode {
    pub fn row_key(&self, row: usize) -> String {
        if self.parents.is_empty() {
            "-".to_string()
        } else {
            format!("{:0width$b}", row, width = self.parents.len())
        }
    }
}

/// A Bayesian network whose nodes are listed in topological order. Atoms that
/// are deterministic facts are folded into `fixed` instead of becoming nodes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BayesNet {
    pub nodes: Vec<BnNode>,
    pub fixed: Vec<String>,
}

impl BayesNet {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn root_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Root).count()
    }
}

struct Draft {
    name: String,
    kind: NodeKind,
    parents: Vec<usize>,
    table: Vec<Prob>,
}

pub fn compile_bn(g: &GroundProgram, opts: &CompileOptions) -> Result<BayesNet, CompileError> {
    let completion = clark_completion(g)?;
    let mut drafts: Vec<Draft> = Vec::new();
    let mut node_of_atom: HashMap<AtomId, usize> = HashMap::new();
    let mut node_of_choice: HashMap<usize, usize> = HashMap::new();
    let mut fixed = Vec::new();

    // Creation order: atoms by id, auxiliary choice nodes just before their atom.
    let mut pending = Vec::new();
    for atom in g.atom_ids() {
        if g.is_fact(atom) {
            fixed.push(g.atom(atom).to_string());
            continue;
        }
        if is_root_atom(g, atom) {
            let cp = g.choice_points().iter().find(|cp| cp.atom == atom).expect("root atom has a choice point");
            node_of_atom.insert(atom, drafts.len());
            drafts.push(Draft {
                name: g.atom(atom).to_string(),
                kind: NodeKind::Root,
                parents: vec![],
                table: vec![cp.prob.clone()],
            });
            continue;
        }
        let def = completion.get(atom).expect("non-root atoms are defined");
        for &c in &def.choices {
            node_of_choice.insert(c, drafts.len());
            let p = g.choice_points()[c].prob.clone();
            drafts.push(Draft { name: aux_name(g, c), kind: NodeKind::Root, parents: vec![], table: vec![p] });
        }
        node_of_atom.insert(atom, drafts.len());
        drafts.push(Draft { name: g.atom(atom).to_string(), kind: NodeKind::Derived, parents: vec![], table: vec![] });
        pending.push(def);
    }

    let roots = drafts.iter().filter(|d| d.kind == NodeKind::Root).count();
    if roots > opts.max_roots {
        return Err(CompileError::TooManyRoots { limit: opts.max_roots, roots });
    }

    for def in pending {
        let me = node_of_atom[&def.atom];
        let mut parents: Vec<usize> = def.choices.iter().map(|c| node_of_choice[c]).collect();
        for lit in def.bodies.iter().flatten() {
            if !g.is_fact(lit.atom) {
                let p = node_of_atom[&lit.atom];
                if !parents.contains(&p) {
                    parents.push(p);
                }
            }
        }
        if parents.len() > opts.max_parents {
            return Err(CompileError::TooManyParents {
                node: drafts[me].name.clone(),
                parents: parents.len(),
                limit: opts.max_parents,
            });
        }
        let k = parents.len();
        let slot = |atom: AtomId| parents.iter().position(|p| *p == node_of_atom[&atom]);
        let table = (0..1usize << k)
            .map(|row| {
                let bit = |j: usize| row >> (k - 1 - j) & 1 == 1;
                let holds = def.eval(
                    |c| bit(parents.iter().position(|p| *p == node_of_choice[&c]).expect("choice parent")),
                    |a| g.is_fact(a) || bit(slot(a).expect("body parent")),
                );
                if holds {
                    prob::one()
                } else {
                    prob::zero()
                }
            })
            .collect();
        drafts[me].parents = parents;
        drafts[me].table = table;
    }

    Ok(BayesNet { nodes: topological(drafts), fixed })
}

/// Kahn's algorithm, always taking the ready node created first.
fn topological(drafts: Vec<Draft>) -> Vec<BnNode> {
    let n = drafts.len();
    let mut indegree: Vec<usize> = drafts.iter().map(|d| d.parents.len()).collect();
    let mut children = vec![Vec::new(); n];
    for (i, d) in drafts.iter().enumerate() {
        for &p in &d.parents {
            children[p].push(i);
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|i| indegree[*i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for &c in &children[i] {
            indegree[c] -= 1;
            if indegree[c] == 0 {
                ready.insert(c);
            }
        }
    }
    let mut position = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        position[i] = pos;
    }
    let mut slots: Vec<Option<Draft>> = drafts.into_iter().map(Some).collect();
    order
        .iter()
        .map(|&i| {
            let d = slots[i].take().expect("each node placed once");
            BnNode {
                name: d.name,
                kind: d.kind,
                parents: d.parents.iter().map(|p| position[*p]).collect(),
                table: d.table,
            }
        })
        .collect()
}

/// `P(q | e)` by summing the joint over every root configuration. Query atoms
/// that are not nodes are true when folded as facts and false otherwise;
/// `undefined` never matches.
pub fn bn_query(bn: &BayesNet, q: &Assignments, e: &Assignments) -> Conditional<Prob> {
    let lookup = |a: &Assignments| -> Vec<(Option<usize>, bool, Truth)> {
        a.iter()
            .map(|(atom, t)| {
                let name = atom.to_string();
                (bn.index_of(&name), bn.fixed.contains(&name), *t)
            })
            .collect()
    };
    let (q, e) = (lookup(q), lookup(e));
    let matches = |vals: &[bool], lits: &[(Option<usize>, bool, Truth)]| {
        lits.iter().all(|(node, fixed, want)| {
            let got = node.map_or(*fixed, |i| vals[i]);
            want.as_bool() == Some(got)
        })
    };

    let roots: Vec<usize> = (0..bn.nodes.len()).filter(|i| bn.nodes[*i].kind == NodeKind::Root).collect();
    let mut joint = Prob::zero();
    let mut evidence = Prob::zero();
    let mut vals = vec![false; bn.nodes.len()];
    for config in 0u64..1u64 << roots.len() {
        let mut weight = Prob::one();
        for (bit, &r) in roots.iter().enumerate() {
            let on = config >> bit & 1 == 1;
            let p = &bn.nodes[r].table[0];
            weight *= if on { p.clone() } else { Prob::one() - p };
        }
        if weight.is_zero() {
            continue;
        }
        for (i, node) in bn.nodes.iter().enumerate() {
            vals[i] = match node.kind {
                NodeKind::Root => config >> roots.iter().position(|r| *r == i).expect("root") & 1 == 1,
                NodeKind::Derived => {
                    let row = node.parents.iter().fold(0usize, |acc, p| acc << 1 | vals[*p] as usize);
                    node.table[row].is_one()
                }
            };
        }
        if matches(&vals, &e) {
            evidence += &weight;
            if matches(&vals, &q) {
                joint += &weight;
            }
        }
    }
    if evidence.is_zero() {
        Conditional::Undefined
    } else {
        Conditional::Defined(joint / evidence)
    }
}
