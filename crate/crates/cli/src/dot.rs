//! Graphviz output for Hasse diagrams.

use std::fmt::Write as _;

use effalg_core::Algebra;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Nodes are the elements, edges the covering pairs of the derived order,
/// both ordered by element index. The top of an effect algebra is labelled
/// `[1]` unless it is already named `1`.
pub fn emit_dot(name: &str, algebra: &Algebra) -> String {
    let g = algebra.as_gea();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for x in g.elements() {
        let mut label = g.name(x).to_string();
        if algebra.top() == Some(x) && label != "1" {
            label.push_str(" [1]");
        }
        writeln!(out, "  n{} [label={}];", x.0, quote(&label)).unwrap();
    }
    for (a, b) in g.derive_order().covers() {
        writeln!(out, "  n{} -> n{};", a.0, b.0).unwrap();
    }
    out.push_str("}\n");
    out
}
