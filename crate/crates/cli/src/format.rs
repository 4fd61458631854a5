//! Text output: centrality CSV and ten-significant-digit numbers.

use std::fmt::Write;

use bcpp::{CentralityVector, Graph};

const SIGNIFICANT: i32 = 10;

/// `x` with ten significant digits. Fixed notation for decimal exponents in
/// `-5..10`, scientific otherwise. Zero prints as `0.0000000000`.
pub fn significant(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.*}", (SIGNIFICANT) as usize, 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Round once in scientific form so the exponent reflects the rounded value.
    let sci = format!("{:.*e}", (SIGNIFICANT - 1) as usize, x);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..SIGNIFICANT).contains(&exp) {
        format!("{:.*}", (SIGNIFICANT - 1 - exp) as usize, x)
    } else {
        sci
    }
}

/// `node,centrality` rows sorted by label.
pub fn centrality_csv(graph: &Graph, centrality: &CentralityVector) -> String {
    let mut rows: Vec<(&str, f64)> = (0..graph.node_count()).map(|v| (graph.label(v), centrality.scores[v])).collect();
    rows.sort_by(|a, b| a.0.cmp(b.0));
    let mut out = String::from("node,centrality\n");
    for (label, score) in rows {
        let _ = writeln!(out, "{label},{}", significant(score));
    }
    out
}
