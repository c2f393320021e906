//! Instance representation and the polynomial subroutines the solver is built
//! from: objective evaluation, shortest paths, constrained minimum spanning
//! trees, shortest-path-tree arborescences and Pareto filtering.
//!
//! Vertices are numbered `1..=n`. Every per-vertex vector in this crate is
//! sized `n + 1` and leaves slot 0 unused so that vertex ids index directly.

mod arborescence;
mod eval;
mod frontier;
mod mst;
mod sssp;

pub use arborescence::min_arborescence;
pub use eval::{cable_cost_by_depth, cable_cost_by_subtree, eval_tree};
pub use frontier::{dominance_filter, Frontier, FrontierPoint};
pub use mst::{kruskal_mst, MstResult, UnionFind};
pub use sssp::{dijkstra_sssp, lexmin_gamma_tau, ShortestPaths, TightArc};

pub(crate) use eval::EdgeSetEvaluator;
pub(crate) use mst::kruskal_edges;
pub(crate) use sssp::dijkstra_masked;

use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest admissible edge cost. Keeps every scaled objective inside `i64`.
pub const MAX_COST: i64 = 1 << 40;

/// An undirected edge with its two cost coefficients.
///
/// `cable` prices the root paths (the cable objective) and `trench` prices the
/// tree itself (the trench objective). Plain cable-trench instances carry the
/// same value in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub cable: i64,
    pub trench: i64,
}

impl Edge {
    pub fn new(u: usize, v: usize, cable: i64, trench: i64) -> Self {
        Edge {
            u,
            v,
            cable,
            trench,
        }
    }

    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// A validated, connected, undirected instance with a distinguished root.
///
/// Edges are stored with `u < v` and sorted by `(u, v)`; an edge index is a
/// position in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    root: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    by_trench: Vec<usize>,
}

impl Graph {
    /// Validates a raw edge list. Endpoints may be given in either order.
    pub fn new(n: usize, root: usize, raw: Vec<Edge>) -> Result<Graph, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        if root == 0 || root > n {
            return Err(GraphError::RootOutOfRange { root, n });
        }
        let mut edges = Vec::with_capacity(raw.len());
        let mut seen = HashSet::with_capacity(raw.len());
        for e in raw {
            let (u, v) = if e.u <= e.v { (e.u, e.v) } else { (e.v, e.u) };
            if u == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { u: e.u, v: e.v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if e.cable < 0 || e.trench < 0 {
                return Err(GraphError::NegativeCost { u, v });
            }
            if e.cable > MAX_COST || e.trench > MAX_COST {
                return Err(GraphError::CostOverflow { u, v });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            edges.push(Edge::new(u, v, e.cable, e.trench));
        }
        edges.sort_by_key(|e| (e.u, e.v));

        let mut adj = vec![Vec::new(); n + 1];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }

        let mut by_trench: Vec<usize> = (0..edges.len()).collect();
        by_trench.sort_by_key(|&i| (edges[i].trench, i));

        let g = Graph {
            n,
            root,
            edges,
            adj,
            by_trench,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Builds a plain cable-trench instance rooted at vertex 1 from
    /// `(u, v, cost)` triples.
    pub fn ctp(n: usize, raw: &[(usize, usize, i64)]) -> Result<Graph, GraphError> {
        let edges = raw.iter().map(|&(u, v, c)| Edge::new(u, v, c, c)).collect();
        Graph::new(n, 1, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// `(neighbor, edge index)` pairs incident to `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Edge indices sorted by `(trench cost, index)`.
    #[inline]
    pub fn edges_by_trench(&self) -> &[usize] {
        &self.by_trench
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
    }

    /// True when every edge has equal cable and trench cost.
    pub fn is_plain_ctp(&self) -> bool {
        self.edges.iter().all(|e| e.cable == e.trench)
    }

    pub(crate) fn full_mask(&self) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.m());
        mask.insert_range(..);
        mask
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }
}

/// A spanning tree, stored both as its edge set and as root-oriented parent
/// links.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    parent: Vec<Option<(usize, usize)>>,
    edges: Vec<usize>,
    order: Vec<usize>,
}

impl Tree {
    /// Orients an edge-index set from the root of `g`. Fails unless the set
    /// has exactly `n - 1` distinct edges that reach every vertex.
    pub fn from_edges(g: &Graph, edge_ids: &[usize]) -> Result<Tree, GraphError> {
        let n = g.n();
        if edge_ids.len() != n - 1 {
            return Err(GraphError::NotSpanningTree);
        }
        let mut edges = edge_ids.to_vec();
        edges.sort_unstable();
        edges.dedup();
        if edges.len() != n - 1 || edges.last().is_some_and(|&i| i >= g.m()) {
            return Err(GraphError::NotSpanningTree);
        }

        let mut incident = vec![Vec::new(); n + 1];
        for &i in &edges {
            let e = g.edge(i);
            incident[e.u].push((e.v, i));
            incident[e.v].push((e.u, i));
        }
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        let mut order = Vec::with_capacity(n);
        seen[g.root()] = true;
        order.push(g.root());
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &(y, i) in &incident[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, i));
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(GraphError::NotSpanningTree);
        }
        Ok(Tree {
            parent,
            edges,
            order,
        })
    }

    /// `(parent vertex, edge index)` for every non-root vertex.
    #[inline]
    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    /// Sorted edge indices.
    #[inline]
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Vertices in breadth-first order from the root.
    #[inline]
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// The root path `P(v)` as edge indices, from `v` upwards.
    pub fn path_to_root(&self, mut v: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some((p, e)) = self.parent[v] {
            path.push(e);
            v = p;
        }
        path
    }
}

/// A point in objective space.
///
/// `cable` is the total cost of the in-tree paths from the root to every other
/// vertex; `trench` is the total cost of the tree edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjectivePoint {
    pub cable: i64,
    pub trench: i64,
}

impl ObjectivePoint {
    pub const fn new(cable: i64, trench: i64) -> Self {
        ObjectivePoint { cable, trench }
    }

    /// Weak componentwise improvement in at least one coordinate.
    pub fn dominates(&self, other: &ObjectivePoint) -> bool {
        self.cable <= other.cable && self.trench <= other.trench && self != other
    }
}

impl std::fmt::Display for ObjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.cable, self.trench)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The 4-cycle `S-2-3-4-S` with costs 5, 6, 4, 10, rooted at `S = 1`.
    pub fn example_one() -> Graph {
        Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap()
    }

    pub fn tree(g: &Graph, pairs: &[(usize, usize)]) -> Tree {
        let ids: Vec<usize> = pairs
            .iter()
            .map(|&(u, v)| g.find_edge(u, v).unwrap())
            .collect();
        Tree::from_edges(g, &ids).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn example_one_is_valid() {
        let g = example_one();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.root(), 1);
        assert!(g.is_plain_ctp());
    }

    #[test]
    fn single_edge_graph() {
        let g = Graph::ctp(2, &[(2, 1, 7)]).unwrap();
        assert_eq!(g.edges(), &[Edge::new(1, 2, 7, 7)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::ctp(4, &[(1, 2, 1), (3, 4, 1)]),
            Err(GraphError::Disconnected)
        );
        assert_eq!(Graph::ctp(2, &[(2, 2, 1)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::ctp(2, &[(1, 2, 1), (2, 1, 3)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 2 })
        );
        assert_eq!(
            Graph::ctp(2, &[(1, 2, -1)]),
            Err(GraphError::NegativeCost { u: 1, v: 2 })
        );
        assert_eq!(
            Graph::ctp(2, &[(1, 2, MAX_COST + 1)]),
            Err(GraphError::CostOverflow { u: 1, v: 2 })
        );
        assert_eq!(Graph::ctp(1, &[]), Err(GraphError::TooFewVertices(1)));
        assert_eq!(
            Graph::new(2, 3, vec![Edge::new(1, 2, 1, 1)]),
            Err(GraphError::RootOutOfRange { root: 3, n: 2 })
        );
        assert!(matches!(
            Graph::ctp(2, &[(1, 3, 1)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn tree_rejects_non_spanning_sets() {
        let g = example_one();
        assert_eq!(
            Tree::from_edges(&g, &[0, 1]),
            Err(GraphError::NotSpanningTree)
        );
        assert_eq!(
            Tree::from_edges(&g, &[0, 0, 1]),
            Err(GraphError::NotSpanningTree)
        );
        // 1-2, 2-3 plus 1-4 is fine, 1-2 twice is not; a cycle needs 4 edges here
        let k4 = Graph::ctp(
            4,
            &[
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 1),
                (1, 4, 1),
                (2, 4, 1),
                (3, 4, 1),
            ],
        )
        .unwrap();
        let cycle = [
            k4.find_edge(1, 2).unwrap(),
            k4.find_edge(1, 3).unwrap(),
            k4.find_edge(2, 3).unwrap(),
        ];
        assert_eq!(
            Tree::from_edges(&k4, &cycle),
            Err(GraphError::NotSpanningTree)
        );
    }

    #[test]
    fn tree_parent_links_reach_root() {
        let g = example_one();
        let t = tree(&g, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(t.parent(1), None);
        assert_eq!(t.parent(4).map(|p| p.0), Some(3));
        assert_eq!(t.path_to_root(4).len(), 3);
        assert_eq!(t.bfs_order(), &[1, 2, 3, 4]);
    }
}
