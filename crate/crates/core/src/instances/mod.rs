//! Seeded benchmark families and the plain-text instance format.
//!
//! Every generator draws from a single Lehmer stream in a fixed order:
//! topology first (points, spanning tree, extra edges), then edge costs in
//! ascending `(u, v)` order. In generalized mode each edge takes two
//! consecutive draws, cable first. Generated instances are always rooted at
//! vertex 1.

mod format;
mod generators;
mod rng;

pub use format::{read_instance, write_instance};
pub use generators::{gen_complete, gen_grid, gen_incomplete, gen_location, gen_windmill};
pub use rng::{RngState, MODULUS};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("density {density} gives {edges} edges, fewer than the {needed} a connected graph on {n} vertices needs")]
    InfeasibleDensity {
        n: usize,
        density: String,
        edges: usize,
        needed: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("windmill with {0} blades exceeds the edge cost cap (at most 12 blades)")]
    CostOverflow(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How the two cost coordinates of an edge are populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostMode {
    /// One draw shared by both coordinates.
    Ctp,
    /// Independent cable and trench costs.
    Gctp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointDistribution {
    /// Uniform on the unit square.
    Uniform,
    /// Standard bivariate normal.
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRule {
    /// Random spanning tree plus uniformly drawn extra pairs.
    Random,
    /// Euclidean MST first, then the shortest remaining pairs.
    MinEuclidean,
    /// Manhattan MST first, then the shortest remaining pairs.
    MinManhattan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Euclidean,
    Manhattan,
}

impl EdgeRule {
    /// Metric used for plain-mode costs when none is given explicitly.
    pub fn default_metric(self) -> Metric {
        match self {
            EdgeRule::Random | EdgeRule::MinEuclidean => Metric::Euclidean,
            EdgeRule::MinManhattan => Metric::Manhattan,
        }
    }
}

/// Parameters of one generated instance. Each family carries exactly the
/// fields it uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum InstanceSpec {
    Incomplete {
        n: usize,
        density: f64,
        cost_mode: CostMode,
        seed: u64,
    },
    Complete {
        n: usize,
        cost_mode: CostMode,
        seed: u64,
    },
    Grid {
        n: usize,
        cost_mode: CostMode,
        seed: u64,
    },
    Location {
        n: usize,
        density: f64,
        distribution: PointDistribution,
        edge_rule: EdgeRule,
        /// Plain-mode cost metric; generalized mode always stores Euclidean
        /// cable and Manhattan trench costs.
        metric: Metric,
        cost_mode: CostMode,
        seed: u64,
    },
    Windmill {
        blades: usize,
    },
}

impl InstanceSpec {
    pub fn generate(&self) -> Result<Graph, InstanceError> {
        match self {
            InstanceSpec::Incomplete { .. } => gen_incomplete(self),
            InstanceSpec::Complete { .. } => gen_complete(self),
            InstanceSpec::Grid { .. } => gen_grid(self),
            InstanceSpec::Location { .. } => gen_location(self),
            InstanceSpec::Windmill { blades } => gen_windmill(*blades),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            InstanceSpec::Incomplete { .. } => "incomplete",
            InstanceSpec::Complete { .. } => "complete",
            InstanceSpec::Grid { .. } => "grid",
            InstanceSpec::Location { .. } => "location",
            InstanceSpec::Windmill { .. } => "windmill",
        }
    }

    /// Seed of the generating stream; windmills are deterministic.
    pub fn seed(&self) -> Option<u64> {
        match *self {
            InstanceSpec::Incomplete { seed, .. }
            | InstanceSpec::Complete { seed, .. }
            | InstanceSpec::Grid { seed, .. }
            | InstanceSpec::Location { seed, .. } => Some(seed),
            InstanceSpec::Windmill { .. } => None,
        }
    }

    /// Label shared by all seeds of the same instance class.
    pub fn class_label(&self) -> String {
        let label = self.to_string();
        match self.seed() {
            Some(seed) => label
                .strip_suffix(&format!("-s{seed}"))
                .unwrap_or(&label)
                .to_string(),
            None => label,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            InstanceSpec::Incomplete { n, .. }
            | InstanceSpec::Complete { n, .. }
            | InstanceSpec::Grid { n, .. }
            | InstanceSpec::Location { n, .. } => n,
            InstanceSpec::Windmill { blades } => 2 * blades + 1,
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = |m: &CostMode| match m {
            CostMode::Ctp => "ctp",
            CostMode::Gctp => "gctp",
        };
        match self {
            InstanceSpec::Incomplete {
                n,
                density,
                cost_mode,
                seed,
            } => write!(f, "incomplete-n{n}-d{density}-{}-s{seed}", mode(cost_mode)),
            InstanceSpec::Complete { n, cost_mode, seed } => {
                write!(f, "complete-n{n}-{}-s{seed}", mode(cost_mode))
            }
            InstanceSpec::Grid { n, cost_mode, seed } => {
                write!(f, "grid-n{n}-{}-s{seed}", mode(cost_mode))
            }
            InstanceSpec::Location {
                n,
                density,
                distribution,
                edge_rule,
                metric,
                cost_mode,
                seed,
            } => write!(
                f,
                "location-n{n}-d{density}-{}-{}-{}-{}-s{seed}",
                match distribution {
                    PointDistribution::Uniform => "uniform",
                    PointDistribution::Normal => "normal",
                },
                match edge_rule {
                    EdgeRule::Random => "random",
                    EdgeRule::MinEuclidean => "min-euclidean",
                    EdgeRule::MinManhattan => "min-manhattan",
                },
                match metric {
                    Metric::Euclidean => "euclidean",
                    Metric::Manhattan => "manhattan",
                },
                mode(cost_mode)
            ),
            InstanceSpec::Windmill { blades } => write!(f, "windmill-k{blades}"),
        }
    }
}
