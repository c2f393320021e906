//! Exact frontier enumeration.
//!
//! Every subproblem is "minimize `wc * cable + wt * trench` subject to
//! `trench <= budget`" over spanning trees, solved by a combinatorial
//! branch-and-bound ([`bnb`]). The epsilon-constraint loop in
//! [`solve_frontier`] drives it with weights `(D, 1)` where `D = d_lex + 1`,
//! which makes every optimum non-dominated with integer costs.

mod bnb;
mod cut;
mod frontier;
mod lexmin;
mod lp;
mod scaling;
mod supported;

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Tree;

pub use bnb::{solve_subproblem, BnbNode, SubproblemOutcome, SubproblemResult};
pub use cut::{cut_threshold, epsilon_cut_filter};
pub use frontier::{solve_frontier, FrontierConfig, FrontierRun, SolveReport};
pub use lexmin::lexmin_tau_gamma;
pub use lp::{export_milp, ExportOptions};
pub use scaling::{compute_scaling, ScalingInfo};
pub use supported::{supported_frontier, SupportedConfig, SupportedRun};

/// Default per-instance time limit in seconds.
pub const DEFAULT_TIME_LIMIT_SECS: u64 = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("scaled objective may exceed the 64-bit range")]
    ScaleOverflow,
}

/// One epsilon-constraint subproblem: minimize `D * cable + trench` subject
/// to `trench <= epsilon`.
#[derive(Debug, Clone)]
pub struct SubproblemSpec {
    pub epsilon: i64,
    pub scaling: ScalingInfo,
    pub cut_enabled: bool,
    pub incumbent_hint: Option<Tree>,
    pub deadline: Option<Instant>,
}

/// Objective weights for the two criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Weights {
    pub cable: i64,
    pub trench: i64,
}

impl Weights {
    pub const fn new(cable: i64, trench: i64) -> Self {
        Weights { cable, trench }
    }

    pub fn apply(&self, p: crate::ObjectivePoint) -> i128 {
        self.cable as i128 * p.cable as i128 + self.trench as i128 * p.trench as i128
    }
}
