use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;

use super::{eval_tree, min_arborescence, Graph, ObjectivePoint, Tree};

/// A directed use `from -> to` of edge `edge` lying on some shortest path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TightArc {
    pub from: usize,
    pub to: usize,
    pub edge: usize,
}

/// Shortest cable distances from the root and the arcs that realize them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPaths {
    /// Indexed by vertex; `dist[root] == 0` and slot 0 is unused.
    pub dist: Vec<i64>,
    pub tight: Vec<TightArc>,
}

impl ShortestPaths {
    /// Sum of distances over all vertices, i.e. the smallest cable objective
    /// any spanning tree can reach.
    pub fn total(&self) -> i64 {
        self.dist.iter().sum()
    }
}

/// Dijkstra on cable costs from the root of `g`.
pub fn dijkstra_sssp(g: &Graph) -> ShortestPaths {
    let dist: Vec<i64> = dijkstra_masked(g, &g.full_mask())
        .into_iter()
        .map(|d| d.unwrap_or(0))
        .collect();
    let mut tight = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if dist[e.u] + e.cable == dist[e.v] && e.v != g.root() {
            tight.push(TightArc {
                from: e.u,
                to: e.v,
                edge: i,
            });
        }
        if dist[e.v] + e.cable == dist[e.u] && e.u != g.root() {
            tight.push(TightArc {
                from: e.v,
                to: e.u,
                edge: i,
            });
        }
    }
    ShortestPaths { dist, tight }
}

/// Dijkstra restricted to the edges in `allowed`. Unreached vertices (and
/// slot 0) are `None`.
pub(crate) fn dijkstra_masked(g: &Graph, allowed: &FixedBitSet) -> Vec<Option<i64>> {
    let mut dist: Vec<Option<i64>> = vec![None; g.n() + 1];
    let mut done = vec![false; g.n() + 1];
    let mut heap = BinaryHeap::new();
    dist[g.root()] = Some(0);
    heap.push(Reverse((0i64, g.root())));
    while let Some(Reverse((d, x))) = heap.pop() {
        if done[x] {
            continue;
        }
        done[x] = true;
        for &(y, i) in g.neighbors(x) {
            if done[y] || !allowed.contains(i) {
                continue;
            }
            let nd = d + g.edge(i).cable;
            if dist[y].is_none_or(|old| nd < old) {
                dist[y] = Some(nd);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

/// Among all shortest-path trees, one of minimum trench cost.
///
/// With strictly positive cable costs the tight arcs form a DAG and every
/// vertex independently keeps its cheapest tight incoming arc. Zero-cost
/// edges can close tight cycles, so that case goes through a general minimum
/// arborescence.
pub fn lexmin_gamma_tau(g: &Graph) -> (Tree, ObjectivePoint) {
    let sp = dijkstra_sssp(g);
    let positive = g.edges().iter().all(|e| e.cable > 0);
    let edge_ids: Vec<usize> = if positive {
        let mut best: Vec<Option<(i64, usize)>> = vec![None; g.n() + 1];
        for arc in &sp.tight {
            let key = (g.edge(arc.edge).trench, arc.edge);
            if best[arc.to].is_none_or(|b| key < b) {
                best[arc.to] = Some(key);
            }
        }
        best.iter().flatten().map(|&(_, e)| e).collect()
    } else {
        let arcs: Vec<(usize, usize, i64, usize)> = sp
            .tight
            .iter()
            .map(|a| (a.from - 1, a.to - 1, g.edge(a.edge).trench, a.edge))
            .collect();
        min_arborescence(g.n(), g.root() - 1, &arcs)
            .expect("shortest-path arcs always span the graph")
    };
    let tree = Tree::from_edges(g, &edge_ids).expect("shortest-path arborescence is a tree");
    let point = eval_tree(g, &tree).expect("tree built on g");
    debug_assert_eq!(point.cable, sp.total());
    (tree, point)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Edge;
    use super::*;

    #[test]
    fn example_one_distances() {
        let sp = dijkstra_sssp(&example_one());
        assert_eq!(&sp.dist[2..], &[5, 11, 10]);
        assert_eq!(sp.total(), 26);
    }

    #[test]
    fn path_and_triangle() {
        let path = Graph::ctp(3, &[(1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(&dijkstra_sssp(&path).dist[2..], &[1, 2]);

        let k3 = Graph::ctp(3, &[(1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let sp = dijkstra_sssp(&k3);
        assert_eq!(&sp.dist[2..], &[1, 1]);
        let mut tight: Vec<_> = sp.tight.iter().map(|a| (a.from, a.to)).collect();
        tight.sort();
        assert_eq!(tight, vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn lexmin_on_example_one() {
        let g = example_one();
        let (t, p) = lexmin_gamma_tau(&g);
        assert_eq!(p, ObjectivePoint::new(26, 21));
        assert_eq!(t, tree(&g, &[(1, 2), (1, 4), (2, 3)]));
    }

    #[test]
    fn lexmin_prefers_cheap_trench_among_tight_arcs() {
        let g = Graph::new(
            3,
            1,
            vec![
                Edge::new(1, 2, 1, 1),
                Edge::new(1, 3, 1, 9),
                Edge::new(2, 3, 2, 1),
            ],
        )
        .unwrap();
        let (t, p) = lexmin_gamma_tau(&g);
        assert_eq!(t, tree(&g, &[(1, 2), (1, 3)]));
        assert_eq!(p, ObjectivePoint::new(2, 10));
    }

    #[test]
    fn lexmin_picks_cheaper_of_two_tight_parents() {
        // vertex 4 is reachable at distance 2 through 2 or 3
        let g = Graph::new(
            4,
            1,
            vec![
                Edge::new(1, 2, 1, 1),
                Edge::new(1, 3, 1, 1),
                Edge::new(2, 4, 1, 7),
                Edge::new(3, 4, 1, 3),
            ],
        )
        .unwrap();
        let (t, p) = lexmin_gamma_tau(&g);
        assert_eq!(t, tree(&g, &[(1, 2), (1, 3), (3, 4)]));
        assert_eq!(p, ObjectivePoint::new(4, 5));
    }

    #[test]
    fn zero_cable_costs_use_general_arborescence() {
        // 2 and 3 are joined by a free cable edge, so tight arcs run both ways
        let g = Graph::new(
            3,
            1,
            vec![
                Edge::new(1, 2, 1, 10),
                Edge::new(1, 3, 1, 1),
                Edge::new(2, 3, 0, 1),
            ],
        )
        .unwrap();
        let (t, p) = lexmin_gamma_tau(&g);
        assert_eq!(t, tree(&g, &[(1, 3), (2, 3)]));
        assert_eq!(p, ObjectivePoint::new(2, 2));
    }
}
