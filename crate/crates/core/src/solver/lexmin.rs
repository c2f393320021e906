use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::bnb::minimize;
use super::{SubproblemOutcome, Weights};
use crate::graph::{kruskal_edges, Graph, ObjectivePoint, Tree};

/// Trench-first lexicographic optimum: the cheapest-cable tree among minimum
/// spanning trees.
pub fn lexmin_tau_gamma(g: &Graph) -> (Tree, ObjectivePoint) {
    lexmin_tau_gamma_until(g, None).expect("no deadline was set")
}

/// `None` if the deadline passes first.
pub(crate) fn lexmin_tau_gamma_until(
    g: &Graph,
    deadline: Option<Instant>,
) -> Option<(Tree, ObjectivePoint)> {
    let none = FixedBitSet::with_capacity(g.m());
    let (_, mst_trench) = kruskal_edges(g, &none, &none).expect("connected graph has an MST");
    let result = minimize(g, Weights::new(1, 0), Some(mst_trench), deadline);
    match result.outcome {
        SubproblemOutcome::Optimal { tree, point, .. } => {
            assert_eq!(
                point.trench, mst_trench,
                "trench-first optimum must cost exactly the MST value"
            );
            Some((tree, point))
        }
        SubproblemOutcome::Infeasible => unreachable!("the MST itself is feasible"),
        SubproblemOutcome::TimedOut { .. } => None,
    }
}
