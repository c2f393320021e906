//! Exact solvers for the bi-objective cable-trench problem and its
//! generalized variant.
//!
//! A cable-trench instance is a connected graph with a root. Every spanning
//! tree `T` is scored twice: the *cable* objective sums the in-tree path cost
//! from the root to every vertex, the *trench* objective sums the tree's edge
//! costs. In the generalized variant each edge carries an independent cost for
//! each objective. The crate enumerates the full set of non-dominated
//! `(cable, trench)` points:
//!
//! * [`solver::solve_frontier`] runs an epsilon-constraint loop over an exact
//!   branch-and-bound, starting from the lexicographic cable-then-trench
//!   optimum and tightening the trench budget by one after every point.
//! * [`oracle::exact_frontier`] enumerates every spanning tree and is the
//!   ground truth for small instances.
//! * [`instances`] generates the benchmark families and reads and writes the
//!   instance file format.
//! * [`solver::export_milp`] writes the mixed-integer formulation in LP text
//!   format for cross-checking with an external MILP engine.
//!
//! ```
//! use bgctp::{solver, Graph, ObjectivePoint};
//!
//! let g = Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap();
//! let run = solver::solve_frontier(&g, &solver::FrontierConfig::default()).unwrap();
//! assert_eq!(
//!     run.frontier.objective_points(),
//!     vec![
//!         ObjectivePoint::new(26, 21),
//!         ObjectivePoint::new(29, 19),
//!         ObjectivePoint::new(31, 15),
//!     ]
//! );
//! ```

pub mod error;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod output;
pub mod solver;

pub use error::GraphError;
pub use graph::{
    dominance_filter, eval_tree, Edge, Frontier, FrontierPoint, Graph, ObjectivePoint, Tree,
};
