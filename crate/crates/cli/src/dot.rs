//! DOT rendering of quiver windows and angles.

use std::fmt::Write;

use angulated::{Angle, FamilyParams, IndecObject, SubcatSpec};

/// Node name `s<k>_f<i>` for an indecomposable.
pub fn node_name(p: &FamilyParams, x: IndecObject) -> String {
    let (k, i) = p.split(x.pos);
    format!("s{k}_f{i}")
}

/// The quiver restricted to positions `from..=to`: one node per
/// indecomposable, one edge per arrow `p → p + 1`. Members of `sub` are
/// filled and tagged `member=true`.
pub fn quiver_dot(p: &FamilyParams, from: i64, to: i64, sub: Option<&SubcatSpec>) -> String {
    let mut out = String::from("digraph quiver {\n  rankdir=LR;\n  node [shape=box];\n");
    for pos in from..=to {
        let x = IndecObject::at(pos);
        let name = node_name(p, x);
        let member = sub.is_some_and(|s| s.contains(x));
        if member {
            writeln!(out, "  \"{name}\" [label=\"{name}\", member=true, style=filled, fillcolor=lightblue];").unwrap();
        } else {
            writeln!(out, "  \"{name}\" [label=\"{name}\"];").unwrap();
        }
    }
    for pos in from..to {
        let a = node_name(p, IndecObject::at(pos));
        let b = node_name(p, IndecObject::at(pos + 1));
        writeln!(out, "  \"{a}\" -> \"{b}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

/// An angle as a chain of slot nodes; the connecting map is dashed and ends
/// at a separate node for `Σ^d X^0`.
pub fn angle_dot(a: &Angle) -> String {
    let p = a.params();
    let mut out = String::from("digraph angle {\n  rankdir=LR;\n  node [shape=box];\n");
    let n = a.objects().len();
    for (k, x) in a.objects().iter().enumerate() {
        writeln!(out, "  x{k} [label=\"{}\"];", x.label(p)).unwrap();
    }
    writeln!(out, "  x{n} [label=\"{}\"];", a.object(0).shifted(p, 1).label(p)).unwrap();
    for (k, f) in a.maps().iter().enumerate() {
        let style = if k + 1 == n { ", style=dashed" } else { "" };
        let zero = if f.is_zero() { "0" } else { "" };
        writeln!(out, "  x{k} -> x{} [label=\"{zero}\"{style}];", k + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_window() {
        let p = FamilyParams::new(4, 4, 9).unwrap();
        let s = SubcatSpec::new(&p, [1, 5, 9]).unwrap();
        let dot = quiver_dot(&p, -1, 2, Some(&s));
        assert!(dot.contains("\"s-1_f11\" [label=\"s-1_f11\"];"));
        assert!(dot.contains("\"s0_f1\" [label=\"s0_f1\", member=true"));
        assert_eq!(dot.matches("->").count(), 3);
        assert!(dot.contains("\"s-1_f12\" -> \"s0_f1\";"));
    }
}
