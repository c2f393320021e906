//! LP-format export of the flow-based mixed-integer formulation.
//!
//! Variables: `x_i_j` (continuous, >= 0) counts cables routed from `i` to `j`
//! for both orientations of every edge; `y_i_j` (binary, `i < j`) opens the
//! trench on edge `{i, j}`. Rows, in order:
//!
//! * `root_flow`: the root sends `n - 1` cables;
//! * `flow_<i>`: every other vertex absorbs exactly one cable;
//! * `tree_size`: exactly `n - 1` trenches;
//! * `couple_<i>_<j>`: cables only run through open trenches;
//! * `budget` (optional): trench cost at most epsilon;
//! * `cut_<i>_<j>` (optional): the per-edge epsilon-cut.
//!
//! Cables never flow back into the root; those variables are fixed to zero in
//! the `Bounds` section.

use std::fmt::Write;

use super::{compute_scaling, cut_threshold, SolverError, Weights};
use crate::graph::Graph;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExportOptions {
    /// Adds the trench budget row.
    pub epsilon: Option<i64>,
    /// Adds the per-edge cut rows; only meaningful together with `epsilon`.
    pub cut: bool,
    /// Objective weights on (cable, trench); defaults to `(d_lex + 1, 1)`.
    pub weights: Option<Weights>,
}

const TERMS_PER_LINE: usize = 8;

pub fn export_milp(g: &Graph, options: &ExportOptions) -> Result<String, SolverError> {
    let weights = match options.weights {
        Some(w) => w,
        None => Weights::new(compute_scaling(g)?.scale, 1),
    };
    let n = g.n();
    let root = g.root();
    let x = |i: usize, j: usize| format!("x_{i}_{j}");
    let y = |i: usize, j: usize| format!("y_{i}_{j}");

    let mut out = String::new();
    // writing into a String cannot fail
    let _ = writeln!(
        out,
        "\\ bi-objective cable-trench MILP: n={n} m={} root={root}",
        g.m()
    );
    let _ = writeln!(
        out,
        "\\ objective: {} * cable + {} * trench",
        weights.cable, weights.trench
    );

    out.push_str("Minimize\n");
    let mut objective = Vec::new();
    for e in g.edges() {
        let c = weights.cable as i128 * e.cable as i128;
        objective.push((c, x(e.u, e.v)));
        objective.push((c, x(e.v, e.u)));
    }
    for e in g.edges() {
        objective.push((weights.trench as i128 * e.trench as i128, y(e.u, e.v)));
    }
    write_row(&mut out, "obj", &explicit(&objective), None);

    out.push_str("Subject To\n");
    let out_of_root: Vec<String> = g.neighbors(root).iter().map(|&(j, _)| x(root, j)).collect();
    write_row(
        &mut out,
        "root_flow",
        &unit(&out_of_root, &[]),
        Some(format!("= {}", n - 1)),
    );
    for i in (1..=n).filter(|&i| i != root) {
        let outgoing: Vec<String> = sorted_neighbors(g, i).map(|j| x(i, j)).collect();
        let incoming: Vec<String> = sorted_neighbors(g, i).map(|k| x(k, i)).collect();
        write_row(
            &mut out,
            &format!("flow_{i}"),
            &unit(&outgoing, &incoming),
            Some("= -1".to_string()),
        );
    }
    let all_y: Vec<String> = g.edges().iter().map(|e| y(e.u, e.v)).collect();
    write_row(
        &mut out,
        "tree_size",
        &unit(&all_y, &[]),
        Some(format!("= {}", n - 1)),
    );
    for e in g.edges() {
        let terms = vec![
            format!("{} {}", n - 1, y(e.u, e.v)),
            format!("- {}", x(e.u, e.v)),
            format!("- {}", x(e.v, e.u)),
        ];
        write_row(
            &mut out,
            &format!("couple_{}_{}", e.u, e.v),
            &terms,
            Some(">= 0".to_string()),
        );
    }
    if let Some(eps) = options.epsilon {
        let budget: Vec<(i128, String)> = g
            .edges()
            .iter()
            .map(|e| (e.trench as i128, y(e.u, e.v)))
            .collect();
        write_row(
            &mut out,
            "budget",
            &explicit(&budget),
            Some(format!("<= {eps}")),
        );
        if options.cut {
            let rhs = cut_threshold(g, eps);
            for e in g.edges() {
                write_row(
                    &mut out,
                    &format!("cut_{}_{}", e.u, e.v),
                    &[format!("{} {}", e.trench, y(e.u, e.v))],
                    Some(format!("<= {rhs}")),
                );
            }
        }
    }

    out.push_str("Bounds\n");
    for &(j, _) in g.neighbors(root) {
        let _ = writeln!(out, " {} = 0", x(j, root));
    }

    out.push_str("Binary\n");
    for chunk in all_y.chunks(TERMS_PER_LINE) {
        let _ = writeln!(out, " {}", chunk.join(" "));
    }
    out.push_str("End\n");
    Ok(out)
}

fn sorted_neighbors(g: &Graph, v: usize) -> impl Iterator<Item = usize> {
    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
    nb.sort_unstable();
    nb.into_iter()
}

fn explicit(terms: &[(i128, String)]) -> Vec<String> {
    terms
        .iter()
        .enumerate()
        .map(|(k, (c, v))| match (k, *c < 0) {
            (0, false) => format!("{c} {v}"),
            (0, true) => format!("- {} {v}", -c),
            (_, false) => format!("+ {c} {v}"),
            (_, true) => format!("- {} {v}", -c),
        })
        .collect()
}

fn unit(plus: &[String], minus: &[String]) -> Vec<String> {
    let mut terms: Vec<String> = plus
        .iter()
        .enumerate()
        .map(|(k, v)| if k == 0 { v.clone() } else { format!("+ {v}") })
        .collect();
    terms.extend(minus.iter().map(|v| format!("- {v}")));
    terms
}

fn write_row(out: &mut String, name: &str, terms: &[String], rhs: Option<String>) {
    let _ = write!(out, " {name}:");
    for (k, chunk) in terms.chunks(TERMS_PER_LINE).enumerate() {
        if k > 0 {
            out.push_str("\n   ");
        }
        let _ = write!(out, " {}", chunk.join(" "));
    }
    if let Some(rhs) = rhs {
        let _ = write!(out, " {rhs}");
    }
    out.push('\n');
}
