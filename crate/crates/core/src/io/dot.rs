//! Graphviz Hasse diagrams.

use std::fmt::Write;

use crate::poset::{Poset, Universe};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the Hasse diagram of `p`.
///
/// Edges run from the outperformed optimizer to the one outperforming it and
/// the graph is laid out bottom-to-top, so better optimizers sit higher.
pub fn write_hasse_dot(p: &Poset, labels: &Universe, name: &str) -> String {
    assert_eq!(p.len(), labels.len(), "poset and labels disagree on size");
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for label in labels.labels() {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    for (i, j) in p.transitive_reduction().pairs() {
        writeln!(out, "  {} -> {};", quote(labels.label(i)), quote(labels.label(j))).unwrap();
    }
    out.push_str("}\n");
    out
}
