//! Graphviz rendering of categories: objects as nodes, nonidentity
//! morphisms as labelled edges.

use std::fmt::Write;

use crate::fincat::FinCategory;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A `digraph` named `name`. With `generators_only`, composites of two
/// non-invertible morphisms are left out.
pub fn category_to_dot(c: &FinCategory, name: &str, generators_only: bool) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for x in c.objects() {
        writeln!(out, "  {};", quote(c.object_name(x))).unwrap();
    }
    for f in c.morphisms().filter(|&f| !c.is_identity(f)) {
        if generators_only && is_composite(c, f) {
            continue;
        }
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(c.object_name(c.src(f))),
            quote(c.object_name(c.tgt(f))),
            quote(c.morphism_name(f))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn is_composite(c: &FinCategory, f: usize) -> bool {
    c.composition_triples()
        .into_iter()
        .any(|(g, h, gh)| gh == f && !c.is_iso(g) && !c.is_iso(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{iso_category, poset_category};

    #[test]
    fn poset_edges() {
        let dot = category_to_dot(&poset_category(2), "p", false);
        assert_eq!(dot.matches("->").count(), 3);
        assert!(dot.contains("\"0\" -> \"2\" [label=\"0-2\"];"));
        let gens = category_to_dot(&poset_category(2), "p", true);
        assert_eq!(gens.matches("->").count(), 2);
    }

    #[test]
    fn composites_through_isomorphisms_are_kept() {
        let dot = category_to_dot(&iso_category(1), "iso", true);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.starts_with("digraph \"iso\" {\n"));
        let dot = category_to_dot(&crate::fixtures::iso_then_arrow(), "c", true);
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn names_are_escaped() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
