//! Plain-text network format.
//!
//! ```text
//! bayesnet 1
//! node burglary root
//! row - 7/10
//! node alarm derived burglary earthquake a1 a2 a3
//! row 00000 0/1
//! ...
//! fixed neighbor(a)
//! ```
//!
//! Nodes appear in topological order. Each row is keyed by the parent values
//! as a bit string (parents in the listed order, `1` for true), or `-` when the
//! node has no parents.

use std::fmt::Write;

use super::bn::{BayesNet, BnNode, NodeKind};
use crate::prob;

const HEADER: &str = "bayesnet 1";

pub fn export_bn(bn: &BayesNet) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for node in &bn.nodes {
        let kind = match node.kind {
            NodeKind::Root => "root",
            NodeKind::Derived => "derived",
        };
        write!(out, "node {} {kind}", node.name).expect("writing to a String");
        for p in &node.parents {
            write!(out, " {}", bn.nodes[*p].name).expect("writing to a String");
        }
        out.push('\n');
        for (row, p) in node.table.iter().enumerate() {
            writeln!(out, "row {} {}", node.row_key(row), prob::format_fraction(p)).expect("writing to a String");
        }
    }
    for f in &bn.fixed {
        writeln!(out, "fixed {f}").expect("writing to a String");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ImportError {
    pub line: usize,
    pub message: String,
}

/// Reads the output of [`export_bn`] back.
pub fn import_bn(text: &str) -> Result<BayesNet, ImportError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: &str| ImportError { line, message: message.to_string() };
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, _)) => return Err(err(n, "missing `bayesnet 1` header")),
        None => return Err(err(0, "empty input")),
    }
    let mut bn = BayesNet::default();
    for (n, line) in lines {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("node") => {
                let name = words.next().ok_or_else(|| err(n, "node without a name"))?.to_string();
                let kind = match words.next() {
                    Some("root") => NodeKind::Root,
                    Some("derived") => NodeKind::Derived,
                    _ => return Err(err(n, "node kind must be `root` or `derived`")),
                };
                let parents = words
                    .map(|p| bn.index_of(p).ok_or_else(|| err(n, &format!("parent `{p}` not declared earlier"))))
                    .collect::<Result<Vec<_>, _>>()?;
                bn.nodes.push(BnNode { name, kind, parents, table: Vec::new() });
            }
            Some("row") => {
                let node = bn.nodes.last_mut().ok_or_else(|| err(n, "row before any node"))?;
                let key = words.next().ok_or_else(|| err(n, "row without key"))?;
                let expected = node.row_key(node.table.len());
                if key != expected {
                    return Err(err(n, &format!("expected row `{expected}`, found `{key}`")));
                }
                let p =
                    words.next().and_then(prob::parse_literal).ok_or_else(|| err(n, "row without a probability"))?;
                node.table.push(p);
            }
            Some("fixed") => {
                let name = words.next().ok_or_else(|| err(n, "fixed without a name"))?;
                bn.fixed.push(name.to_string());
            }
            _ => return Err(err(n, "expected `node`, `row` or `fixed`")),
        }
    }
    for node in &bn.nodes {
        if node.table.len() != 1 << node.parents.len() {
            return Err(err(0, &format!("node `{}` has an incomplete table", node.name)));
        }
    }
    Ok(bn)
}
