//! Rendering helpers: DOT export and text reports.

use friendly_split::engine::Decomposition;
use friendly_split::graph::Graph;
use friendly_split::verify::PropertyReport;

/// DOT rendering with the fixed color convention: A red, B blue, C green.
pub fn to_dot(g: &Graph, d: Option<&Decomposition>) -> String {
    let mut out = String::from("graph friendly_split {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let color = match d {
            Some(d) if d.a.contains(v) => "red",
            Some(d) if d.b.contains(v) => "blue",
            Some(d) if d.c.contains(v) => "green",
            _ => "lightgray",
        };
        out.push_str(&format!("  {v} [fillcolor={color}];\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn property_report_text(report: &PropertyReport) -> String {
    let line = |label: &str, pass: bool, witnesses: String| {
        format!(
            "  {label}: {}{}\n",
            if pass { "pass" } else { "FAIL" },
            if pass {
                String::new()
            } else {
                format!(" (witnesses: {witnesses})")
            }
        )
    };
    let mut out = String::new();
    out.push_str(&line(
        "majority in A",
        report.majority_a.pass(),
        format!("{:?}", report.majority_a.witnesses),
    ));
    out.push_str(&line(
        "majority in B",
        report.majority_b.pass(),
        format!("{:?}", report.majority_b.witnesses),
    ));
    out.push_str(&line(
        "C independent",
        report.c_independent.pass(),
        format!("{:?}", report.c_independent.witnesses),
    ));
    out.push_str(&line(
        "C balanced",
        report.c_balanced.pass(),
        format!("{:?}", report.c_balanced.witnesses),
    ));
    out.push_str(&line(
        "edge budget",
        report.edge_budget_holds,
        format!("{} <= {}", report.edge_budget_lhs, report.edge_budget_rhs),
    ));
    out
}
