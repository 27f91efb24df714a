//! Output plumbing shared by the commands: name-aware labels, stable JSON
//! emission, and DOT Hasse diagrams with transitively reduced edge sets.

use std::fmt::Write;

use salv_core::coxeter::{Elem, TypeSubset};
use serde::Serialize;

/// Member names of a subset, in generator order.
pub fn subset_names(names: &[String], ty: TypeSubset) -> Vec<String> {
    ty.iter().map(|s| names[s as usize].clone()).collect()
}

/// `{s,t}` — the braces spelling used in human output and DOT labels.
pub fn subset_label(names: &[String], ty: TypeSubset) -> String {
    format!("{{{}}}", subset_names(names, ty).join(","))
}

/// Letters of a canonical word, spelled with generator names.
pub fn word_names(names: &[String], e: &Elem) -> Vec<String> {
    e.word().iter().map(|&s| names[s as usize].clone()).collect()
}

/// `s t s` for a word, `1` for the identity.
pub fn word_label(names: &[String], e: &Elem) -> String {
    if e.is_identity() {
        "1".into()
    } else {
        word_names(names, e).join(" ")
    }
}

/// Pretty JSON plus a trailing newline. Field order follows struct
/// declaration order, so output is byte-stable across runs.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

/// Covering relations of a finite poset given its order predicate:
/// `a ⋖ b` iff `a < b` with nothing strictly between.
pub fn covering_edges(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut less = vec![vec![false; n]; n];
    for (a, row) in less.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = a != b && leq(a, b);
        }
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// A DOT digraph drawing lower elements below higher ones.
pub fn dot_digraph(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir = BT;").unwrap();
    writeln!(out, "  node [shape = box];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
