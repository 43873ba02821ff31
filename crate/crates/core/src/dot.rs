//! Graphviz export.

use std::fmt::Write;

use crate::morphism::PosetMorphism;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotKind {
    /// Undirected, one edge per comparable pair.
    Comparability,
    /// Undirected, one edge per cover.
    Covering,
    /// Directed upward covers drawn bottom to top.
    Hasse,
}

impl std::str::FromStr for DotKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "comparability" => Ok(DotKind::Comparability),
            "covering" => Ok(DotKind::Covering),
            "hasse" => Ok(DotKind::Hasse),
            other => Err(format!("unknown diagram kind `{other}`")),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edges(p: &Poset, kind: DotKind) -> Vec<(usize, usize)> {
    match kind {
        DotKind::Comparability => p
            .elements()
            .flat_map(|a| p.elements().filter(move |&b| p.lt(a, b)).map(move |b| (a, b)))
            .collect(),
        DotKind::Covering | DotKind::Hasse => p.cover_pairs().collect(),
    }
}

fn connector(kind: DotKind) -> &'static str {
    match kind {
        DotKind::Hasse => "->",
        _ => "--",
    }
}

fn body(out: &mut String, p: &Poset, kind: DotKind, prefix: &str, indent: &str) {
    let id = |a: usize| quote(&format!("{prefix}{}", p.name(a)));
    for a in p.elements() {
        writeln!(out, "{indent}{} [label={}];", id(a), quote(p.name(a))).unwrap();
    }
    for (a, b) in edges(p, kind) {
        writeln!(out, "{indent}{} {} {};", id(a), connector(kind), id(b)).unwrap();
    }
}

pub fn poset_dot(p: &Poset, kind: DotKind) -> String {
    let mut out = String::new();
    out.push_str(if kind == DotKind::Hasse { "digraph poset {\n  rankdir=BT;\n" } else { "graph poset {\n" });
    body(&mut out, p, kind, "", "  ");
    out.push_str("}\n");
    out
}

/// Source and target as two clusters, with dashed mapping edges. The
/// comparability and covering kinds use undirected edges inside clusters.
pub fn morphism_dot(phi: &PosetMorphism, kind: DotKind) -> String {
    let mut out = String::from("digraph morphism {\n  rankdir=BT;\n");
    for (name, poset, prefix) in [("source", phi.source(), "s:"), ("target", phi.target(), "t:")] {
        writeln!(out, "  subgraph cluster_{name} {{\n    label={};", quote(name)).unwrap();
        if kind != DotKind::Hasse {
            out.push_str("    edge [dir=none];\n");
        }
        let mut inner = String::new();
        body(&mut inner, poset, kind, prefix, "    ");
        out.push_str(&inner.replace(" -- ", " -> "));
        out.push_str("  }\n");
    }
    for a in phi.source().elements() {
        writeln!(
            out,
            "  {} -> {} [style=dashed];",
            quote(&format!("s:{}", phi.source().name(a))),
            quote(&format!("t:{}", phi.target().name(phi.image(a))))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn count(text: &str, pat: &str) -> usize {
        text.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn two_chain_hasse() {
        let p = Poset::new(["A", "B"], [("A", "B")]).unwrap();
        let dot = poset_dot(&p, DotKind::Hasse);
        assert_eq!(count(&dot, "[label="), 2);
        assert_eq!(count(&dot, " -> "), 1);
    }

    #[test]
    fn trop_covering_graph() {
        let dot = poset_dot(fixtures::trop().source(), DotKind::Covering);
        assert_eq!(count(&dot, "[label="), 8);
        assert_eq!(count(&dot, " -- "), 8);
    }

    #[test]
    fn ce1_morphism() {
        let dot = morphism_dot(&fixtures::ce1(), DotKind::Hasse);
        assert_eq!(count(&dot, "[label="), 5);
        assert_eq!(count(&dot, "[style=dashed]"), 3);
        assert_eq!(count(&dot, " -> ") - 3, 3);
    }
}
