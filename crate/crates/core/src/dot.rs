//! Graphviz output.

use std::fmt::Write;

use crate::fiber_tree::{NervePoset, NerveVertex};
use crate::strings::StringPoset;

/// Hasse diagram, upper covers drawn above.
pub fn hasse_dot(poset: &StringPoset) -> String {
    let mut out = format!(
        "digraph \"Str({},{})\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n",
        poset.n(),
        poset.m()
    );
    for (i, s) in poset.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{s}\"];").unwrap();
    }
    for (a, b) in poset.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The bipartite graph Γ, `Br'_q` on the bottom row.
pub fn gamma_dot(nerve: &NervePoset) -> String {
    let n = nerve.branch_count();
    let elements = nerve.elements();
    let mut out = String::from("graph Gamma {\n  node [shape=ellipse];\n");
    for (rank, primed) in [("min", true), ("max", false)] {
        let ids: Vec<String> = elements
            .iter()
            .filter(|v| matches!(v, NerveVertex::BrPrime(_)) == primed)
            .map(|v| format!("v{}", nerve.index(*v)))
            .collect();
        writeln!(out, "  {{ rank={rank}; {}; }}", ids.join("; ")).unwrap();
    }
    for v in &elements {
        writeln!(out, "  v{} [label=\"{v}\"];", nerve.index(*v)).unwrap();
    }
    for a in &elements {
        for b in &elements {
            if nerve.less(*a, *b) {
                writeln!(out, "  v{} -- v{};", nerve.index(*a), nerve.index(*b)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    debug_assert_eq!(out.matches(" -- ").count(), n * n - n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::enumerate_strings;

    #[test]
    fn hasse_has_every_cover() {
        let p = enumerate_strings(5, 2).unwrap();
        let dot = hasse_dot(&p);
        assert_eq!(dot.matches(" -> ").count(), p.covers().len());
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn gamma_edges() {
        let dot = gamma_dot(&NervePoset::new(4));
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("label=\"Br'3\""));
    }
}
