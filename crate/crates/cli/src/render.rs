//! ASCII grids and Graphviz output for complexes, both read from the
//! sorted JSON records so that free and reduced complexes render alike.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use cfk::complex::{shift_label, ComplexJson};

/// One column per Alexander grading, one row per Maslov grading (highest
/// first); each cell lists generators as `name(M)`. Arrows follow.
pub fn ascii(json: &ComplexJson) -> String {
    let columns: BTreeSet<i64> = json.generators.iter().map(|g| g.alexander).collect();
    let columns: Vec<i64> = columns.into_iter().collect();
    let mut rows: BTreeMap<std::cmp::Reverse<i64>, Vec<Vec<String>>> = BTreeMap::new();
    for g in &json.generators {
        let col = columns.binary_search(&g.alexander).expect("column exists");
        let row = rows.entry(std::cmp::Reverse(g.maslov)).or_insert_with(|| vec![Vec::new(); columns.len()]);
        row[col].push(format!("{}({})", g.name, g.maslov));
    }
    let header: Vec<String> = columns.iter().map(|a| format!("A={a}")).collect();
    let cells: Vec<Vec<String>> = rows.values().map(|r| r.iter().map(|c| c.join(" ")).collect()).collect();
    let width: Vec<usize> = (0..columns.len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([header[j].len()]).max().unwrap_or(0))
        .collect();

    let mut out = String::new();
    let line = |out: &mut String, items: &[String]| {
        let padded: Vec<String> = items.iter().zip(&width).map(|(s, &w)| format!("{s:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &header);
    for r in &cells {
        line(&mut out, r);
    }
    if !json.differential.is_empty() {
        out.push_str("differential:\n");
        for a in &json.differential {
            let _ = writeln!(out, "  {} -> {}", a.from, shift_label(&a.to, a.upower));
        }
    }
    if let Some(u) = json.umap.as_ref().filter(|u| !u.is_empty()) {
        out.push_str("U map:\n");
        for a in u {
            let _ = writeln!(out, "  {} -> {}", a.from, a.to);
        }
    }
    if let Some(w) = json.stable_window {
        let _ = writeln!(out, "stable window: A >= {w}");
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Points per unit of grading in node positions (`neato -n` reads points).
const SCALE: i64 = 60;

/// Nodes pinned at (A, M); solid edges for ∂, dashed edges for U.
pub fn dot(json: &ComplexJson) -> String {
    let mut out = String::from("digraph cfk {\n  node [shape=plaintext];\n");
    for g in &json.generators {
        let label = format!("{} ({},{})", g.name, g.alexander, g.maslov);
        let (x, y) = (g.alexander * SCALE, g.maslov * SCALE);
        let _ = writeln!(out, "  {} [label={}, pos=\"{x},{y}!\"];", quote(&g.name), quote(&label));
    }
    for a in &json.differential {
        let attrs = match a.upower {
            0 => String::new(),
            1 => " [label=\"U\"]".into(),
            k => format!(" [label=\"U^{k}\"]"),
        };
        let _ = writeln!(out, "  {} -> {}{attrs};", quote(&a.from), quote(&a.to));
    }
    for a in json.umap.iter().flatten() {
        let _ = writeln!(out, "  {} -> {} [style=dashed, color=gray];", quote(&a.from), quote(&a.to));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfk::reduction::{reduce, ReduceOptions};
    use cfk::staircase::{staircase_complex, Staircase};

    fn trefoil() -> cfk::complex::FreeUComplex {
        staircase_complex(&Staircase::new(vec![1]).unwrap(), false)
    }

    #[test]
    fn trefoil_grid() {
        let text = ascii(&trefoil().to_json());
        let expected = "\
A=-1     A=0     A=1
                 x1(0)
         x0(-1)
x-1(-2)
differential:
  x0 -> U x1
  x0 -> x-1
";
        assert_eq!(text, expected);
    }

    #[test]
    fn reduced_grid_lists_u_map() {
        let r = reduce(&trefoil(), &ReduceOptions { depth: Some(2), verify: false }).unwrap();
        let text = ascii(&r.to_json());
        // Inside the window the bent trefoil arrow is all that remains.
        assert!(text.contains("U map:\n  x1 -> x-1\n  x-1 -> U x-1\n"), "{text}");
        assert!(text.ends_with("stable window: A >= -1\n"), "{text}");
    }

    #[test]
    fn dot_shape() {
        let text = dot(&trefoil().to_json());
        assert!(text.starts_with("digraph cfk {"));
        assert!(text.contains("\"x1\" [label=\"x1 (1,0)\", pos=\"60,0!\"];"));
        assert!(text.contains("\"x0\" -> \"x1\" [label=\"U\"];"));
        assert!(text.contains("\"x0\" -> \"x-1\";"));
        assert!(text.trim_end().ends_with('}'));
    }
}
