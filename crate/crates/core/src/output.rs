//! Text renderings of a frontier: the point CSV and the witness-tree sidecar.
//!
//! The sidecar has one line per point, in CSV order:
//! `<c_gamma>,<c_tau>:<edge> <edge> ...` where edges are 0-based indices into
//! the instance's edge list (the order of `e` lines in the instance file).

use std::fmt::Write;

use crate::graph::{Frontier, ObjectivePoint};

pub const FRONTIER_CSV_HEADER: &str = "c_gamma,c_tau";

pub fn frontier_csv(frontier: &Frontier) -> String {
    let mut out = String::from(FRONTIER_CSV_HEADER);
    out.push('\n');
    for fp in frontier {
        let _ = writeln!(out, "{},{}", fp.point.cable, fp.point.trench);
    }
    out
}

pub fn frontier_trees(frontier: &Frontier) -> String {
    let mut out = String::new();
    for fp in frontier {
        let edges: Vec<String> = fp.tree.edges().iter().map(|e| e.to_string()).collect();
        let _ = writeln!(
            out,
            "{},{}:{}",
            fp.point.cable,
            fp.point.trench,
            edges.join(" ")
        );
    }
    out
}

/// Reads back the points of a frontier CSV. Returns `None` on any malformed
/// line or a missing header.
pub fn parse_frontier_csv(text: &str) -> Option<Vec<ObjectivePoint>> {
    let mut lines = text.lines();
    if lines.next()? != FRONTIER_CSV_HEADER {
        return None;
    }
    lines
        .map(|l| {
            let (c, t) = l.split_once(',')?;
            Some(ObjectivePoint::new(c.parse().ok()?, t.parse().ok()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{example_one, tree};
    use crate::graph::{dominance_filter, eval_tree, FrontierPoint};

    fn example_frontier() -> Frontier {
        let g = example_one();
        let trees = [
            tree(&g, &[(1, 2), (2, 3), (1, 4)]),
            tree(&g, &[(1, 2), (1, 4), (3, 4)]),
            tree(&g, &[(1, 2), (2, 3), (3, 4)]),
        ];
        dominance_filter(trees.into_iter().map(|t| FrontierPoint {
            point: eval_tree(&g, &t).unwrap(),
            tree: t,
        }))
    }

    #[test]
    fn csv_and_sidecar() {
        let f = example_frontier();
        assert_eq!(frontier_csv(&f), "c_gamma,c_tau\n26,21\n29,19\n31,15\n");
        assert_eq!(
            frontier_trees(&f),
            "26,21:0 1 2\n29,19:0 1 3\n31,15:0 2 3\n"
        );
    }

    #[test]
    fn csv_round_trip() {
        let f = example_frontier();
        assert_eq!(
            parse_frontier_csv(&frontier_csv(&f)).unwrap(),
            f.objective_points()
        );
        assert_eq!(parse_frontier_csv("c_gamma,c_tau\n").unwrap(), vec![]);
        assert!(parse_frontier_csv("x,y\n1,2\n").is_none());
        assert!(parse_frontier_csv("c_gamma,c_tau\n1;2\n").is_none());
    }
}
