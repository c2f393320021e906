use std::time::{Duration, Instant};

use super::bnb::minimize;
use super::lexmin::lexmin_tau_gamma_until;
use super::{SubproblemOutcome, Weights, DEFAULT_TIME_LIMIT_SECS};
use crate::graph::{lexmin_gamma_tau, Frontier, FrontierPoint, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportedConfig {
    pub time_limit: Option<Duration>,
}

impl Default for SupportedConfig {
    fn default() -> Self {
        SupportedConfig {
            time_limit: Some(Duration::from_secs(DEFAULT_TIME_LIMIT_SECS)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SupportedRun {
    pub frontier: Frontier,
    pub timed_out: bool,
    pub bnb_nodes: u64,
    pub subproblems_solved: usize,
}

/// Extreme supported points by dichotomic weighted-sum search.
///
/// For two adjacent known points `p` (cheaper cable) and `q` the weights
/// `(p.trench - q.trench, q.cable - p.cable)` make both equally good; an
/// optimum strictly better than that value is a new hull vertex between them.
pub fn supported_frontier(g: &Graph, config: &SupportedConfig) -> SupportedRun {
    let deadline = config.time_limit.map(|d| Instant::now() + d);
    let (t0, p0) = lexmin_gamma_tau(g);
    let left = FrontierPoint {
        point: p0,
        tree: t0,
    };
    let mut run = SupportedRun {
        frontier: Frontier::default(),
        timed_out: false,
        bnb_nodes: 0,
        subproblems_solved: 0,
    };
    let Some((t1, p1)) = lexmin_tau_gamma_until(g, deadline) else {
        run.timed_out = true;
        run.frontier = Frontier::from_sorted(vec![left]).expect("single point");
        return run;
    };
    if p1 == p0 {
        run.frontier = Frontier::from_sorted(vec![left]).expect("single point");
        return run;
    }
    let right = FrontierPoint {
        point: p1,
        tree: t1,
    };

    let mut found = vec![left.clone(), right.clone()];
    let mut pending = vec![(left, right)];
    while let Some((p, q)) = pending.pop() {
        let weights = Weights::new(
            p.point.trench - q.point.trench,
            q.point.cable - p.point.cable,
        );
        let result = minimize(g, weights, None, deadline);
        run.bnb_nodes += result.nodes;
        run.subproblems_solved += 1;
        match result.outcome {
            SubproblemOutcome::Optimal {
                tree,
                point,
                objective,
            } => {
                if objective < weights.apply(p.point) {
                    let r = FrontierPoint { point, tree };
                    found.push(r.clone());
                    pending.push((r.clone(), q));
                    pending.push((p, r));
                }
            }
            SubproblemOutcome::Infeasible => unreachable!("weighted sum is unconstrained"),
            SubproblemOutcome::TimedOut { .. } => {
                run.timed_out = true;
                break;
            }
        }
    }
    found.sort_by_key(|f| f.point);
    run.frontier = Frontier::from_sorted(found).expect("hull vertices are non-dominated");
    run
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ObjectivePoint;

    fn unlimited() -> SupportedConfig {
        SupportedConfig { time_limit: None }
    }

    #[test]
    fn example_one_skips_the_unsupported_point() {
        let g = Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap();
        let run = supported_frontier(&g, &unlimited());
        assert_eq!(
            run.frontier.objective_points(),
            vec![ObjectivePoint::new(26, 21), ObjectivePoint::new(31, 15)]
        );
    }

    #[test]
    fn ideal_point_is_alone() {
        let g = Graph::ctp(3, &[(1, 2, 1), (1, 3, 1), (2, 3, 5)]).unwrap();
        assert_eq!(supported_frontier(&g, &unlimited()).frontier.len(), 1);
    }

    #[test]
    fn one_blade_windmill() {
        let g = Graph::ctp(3, &[(1, 2, 3), (1, 3, 4), (2, 3, 2)]).unwrap();
        assert_eq!(
            supported_frontier(&g, &unlimited())
                .frontier
                .objective_points(),
            vec![ObjectivePoint::new(7, 7), ObjectivePoint::new(8, 5)]
        );
    }
}
