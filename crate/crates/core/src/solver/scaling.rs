use serde::Serialize;

use super::SolverError;
use crate::graph::{kruskal_edges, lexmin_gamma_tau, Graph};

/// Weight calibration for the hybrid subproblem objective.
///
/// `d_lex` is the widest trench spread two efficient trees can have: the
/// trench cost of the cable-first lexicographic optimum minus the MST cost.
/// Scaling the cable objective by `scale = d_lex + 1` means one unit of cable
/// improvement always outweighs any trench degradation between efficient
/// trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScalingInfo {
    pub d_lex: i64,
    pub scale: i64,
}

pub fn compute_scaling(g: &Graph) -> Result<ScalingInfo, SolverError> {
    let (_, lex) = lexmin_gamma_tau(g);
    let none = fixedbitset::FixedBitSet::with_capacity(g.m());
    let (_, mst) = kruskal_edges(g, &none, &none).expect("connected graph has an MST");
    scaling_from(g, lex.trench, mst)
}

pub(crate) fn scaling_from(
    g: &Graph,
    lexmin_trench: i64,
    mst_trench: i64,
) -> Result<ScalingInfo, SolverError> {
    let d_lex = lexmin_trench - mst_trench;
    debug_assert!(d_lex >= 0);
    let info = ScalingInfo {
        d_lex,
        scale: d_lex + 1,
    };
    // crude caps: every root path uses at most the n-1 most expensive edges
    let k = g.n() - 1;
    let top = |mut costs: Vec<i64>| -> i128 {
        costs.sort_unstable_by(|a, b| b.cmp(a));
        costs.iter().take(k).map(|&c| c as i128).sum()
    };
    let max_cable = k as i128 * top(g.edges().iter().map(|e| e.cable).collect());
    let max_trench = top(g.edges().iter().map(|e| e.trench).collect());
    if info.scale as i128 * max_cable + max_trench >= i64::MAX as i128 {
        return Err(SolverError::ScaleOverflow);
    }
    Ok(info)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MAX_COST;

    #[test]
    fn example_one() {
        let g = Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap();
        assert_eq!(compute_scaling(&g), Ok(ScalingInfo { d_lex: 6, scale: 7 }));
    }

    #[test]
    fn shortest_path_tree_is_minimum_spanning_tree() {
        let g = Graph::ctp(3, &[(1, 2, 1), (1, 3, 1), (2, 3, 5)]).unwrap();
        assert_eq!(compute_scaling(&g), Ok(ScalingInfo { d_lex: 0, scale: 1 }));
    }

    #[test]
    fn two_blade_windmill() {
        let g = Graph::ctp(
            5,
            &[
                (1, 2, 3),
                (1, 3, 4),
                (2, 3, 2),
                (1, 4, 30),
                (1, 5, 40),
                (4, 5, 20),
            ],
        )
        .unwrap();
        // cable-first optimum is the star (77, 77); the MST costs 55
        assert_eq!(
            compute_scaling(&g),
            Ok(ScalingInfo {
                d_lex: 22,
                scale: 23
            })
        );
    }

    #[test]
    fn huge_costs_on_long_paths_overflow() {
        let n = 3000;
        let raw: Vec<(usize, usize, i64)> = (1..n).map(|v| (v, v + 1, MAX_COST)).collect();
        let mut raw = raw;
        raw.push((1, n, 0));
        let g = Graph::ctp(n, &raw).unwrap();
        assert_eq!(compute_scaling(&g), Err(SolverError::ScaleOverflow));
    }
}
