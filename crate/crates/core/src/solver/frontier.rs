use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::scaling::scaling_from;
use super::{
    solve_subproblem, ScalingInfo, SolverError, SubproblemOutcome, SubproblemSpec,
    DEFAULT_TIME_LIMIT_SECS,
};
use crate::graph::{kruskal_edges, lexmin_gamma_tau, Frontier, FrontierPoint, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierConfig {
    pub cut_enabled: bool,
    /// Wall-clock limit for the whole instance; `None` runs to completion.
    pub time_limit: Option<Duration>,
}

impl Default for FrontierConfig {
    fn default() -> Self {
        FrontierConfig {
            cut_enabled: true,
            time_limit: Some(Duration::from_secs(DEFAULT_TIME_LIMIT_SECS)),
        }
    }
}

/// Statistics for one frontier run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub points_found: usize,
    pub bnb_nodes: u64,
    /// Branch-and-bound invocations, including the final infeasible one.
    pub subproblems_solved: usize,
    pub subproblem_millis: Vec<f64>,
    pub timed_out: bool,
    /// Edges removed by the epsilon-cut, summed over subproblems.
    pub cut_filtered_edges: usize,
    pub scaling: ScalingInfo,
}

#[derive(Debug, Clone)]
pub struct FrontierRun {
    pub frontier: Frontier,
    pub report: SolveReport,
}

/// Enumerates the complete non-dominated set.
///
/// Starts from the cable-first lexicographic optimum, then repeatedly solves
/// the scaled subproblem with the trench budget set one below the last
/// point's trench cost until it becomes infeasible. Each optimum is the
/// cable-minimal point under the budget, so consecutive points are adjacent on
/// the frontier and none is skipped. On time-out the points proven so far are
/// returned with `timed_out` set.
pub fn solve_frontier(g: &Graph, config: &FrontierConfig) -> Result<FrontierRun, SolverError> {
    let deadline = config.time_limit.map(|d| Instant::now() + d);
    let (first_tree, first) = lexmin_gamma_tau(g);
    let none = FixedBitSet::with_capacity(g.m());
    let (_, mst_trench) = kruskal_edges(g, &none, &none).expect("connected graph has an MST");
    let scaling = scaling_from(g, first.trench, mst_trench)?;

    let mut points = vec![FrontierPoint {
        point: first,
        tree: first_tree,
    }];
    let mut report = SolveReport {
        points_found: 0,
        bnb_nodes: 0,
        subproblems_solved: 0,
        subproblem_millis: Vec::new(),
        timed_out: false,
        cut_filtered_edges: 0,
        scaling,
    };

    // with d_lex = 0 the ideal point is attained and nothing else is efficient
    if scaling.d_lex > 0 {
        loop {
            let last = points.last().expect("frontier starts non-empty").point;
            let spec = SubproblemSpec {
                epsilon: last.trench - 1,
                scaling,
                cut_enabled: config.cut_enabled,
                incumbent_hint: None,
                deadline,
            };
            let started = Instant::now();
            let result = solve_subproblem(g, &spec);
            report
                .subproblem_millis
                .push(started.elapsed().as_secs_f64() * 1e3);
            report.subproblems_solved += 1;
            report.bnb_nodes += result.nodes;
            report.cut_filtered_edges += result.cut_filtered_edges;
            match result.outcome {
                SubproblemOutcome::Optimal { tree, point, .. } => {
                    assert!(
                        point.cable > last.cable && point.trench < last.trench,
                        "iterates must move strictly along the frontier: {last} then {point}"
                    );
                    points.push(FrontierPoint { point, tree });
                }
                SubproblemOutcome::Infeasible => break,
                SubproblemOutcome::TimedOut { .. } => {
                    report.timed_out = true;
                    break;
                }
            }
        }
    }

    report.points_found = points.len();
    let frontier = Frontier::from_sorted(points).expect("iterates are sorted and non-dominated");
    Ok(FrontierRun { frontier, report })
}
