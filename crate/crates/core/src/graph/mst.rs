use fixedbitset::FixedBitSet;

use super::{Graph, Tree};
use crate::error::GraphError;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// A minimum-trench spanning tree under edge restrictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MstResult {
    pub tree: Tree,
    /// Edge indices in the order Kruskal accepted them (forced edges first).
    pub insertion_order: Vec<usize>,
    pub trench_cost: i64,
}

/// Kruskal on trench costs. Every `forced` edge is taken, no `forbidden` edge
/// is; ties go to the lower edge index.
pub fn kruskal_mst(
    g: &Graph,
    forced: &FixedBitSet,
    forbidden: &FixedBitSet,
) -> Result<MstResult, GraphError> {
    if forced.ones().any(|i| forbidden.contains(i)) {
        return Err(GraphError::ConflictingRestrictions);
    }
    let (insertion_order, trench_cost) =
        kruskal_edges(g, forced, forbidden).ok_or(GraphError::Infeasible)?;
    let tree = Tree::from_edges(g, &insertion_order)?;
    Ok(MstResult {
        tree,
        insertion_order,
        trench_cost,
    })
}

/// Allocation-light core of [`kruskal_mst`]. `None` when the forced edges
/// contain a cycle or the non-forbidden edges do not connect the graph.
pub(crate) fn kruskal_edges(
    g: &Graph,
    forced: &FixedBitSet,
    forbidden: &FixedBitSet,
) -> Option<(Vec<usize>, i64)> {
    let n = g.n();
    let mut uf = UnionFind::new(n + 1);
    let mut chosen = Vec::with_capacity(n - 1);
    let mut cost = 0;
    for i in forced.ones() {
        let e = g.edge(i);
        if !uf.union(e.u, e.v) {
            return None;
        }
        chosen.push(i);
        cost += e.trench;
    }
    for &i in g.edges_by_trench() {
        if chosen.len() == n - 1 {
            break;
        }
        if forced.contains(i) || forbidden.contains(i) {
            continue;
        }
        let e = g.edge(i);
        if uf.union(e.u, e.v) {
            chosen.push(i);
            cost += e.trench;
        }
    }
    (chosen.len() == n - 1).then_some((chosen, cost))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn set(g: &Graph, ids: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(g.m());
        for &i in ids {
            s.insert(i);
        }
        s
    }

    #[test]
    fn unrestricted_example_one() {
        let g = example_one();
        let none = set(&g, &[]);
        let r = kruskal_mst(&g, &none, &none).unwrap();
        assert_eq!(r.trench_cost, 15);
        let pairs: Vec<_> = r
            .insertion_order
            .iter()
            .map(|&i| (g.edge(i).u, g.edge(i).v))
            .collect();
        assert_eq!(pairs, vec![(3, 4), (1, 2), (2, 3)]);
    }

    #[test]
    fn forbidding_the_cheapest_edge() {
        let g = example_one();
        let forbidden = set(&g, &[g.find_edge(3, 4).unwrap()]);
        let r = kruskal_mst(&g, &set(&g, &[]), &forbidden).unwrap();
        assert_eq!(r.tree, tree(&g, &[(1, 2), (2, 3), (1, 4)]));
        assert_eq!(r.trench_cost, 21);
    }

    #[test]
    fn fully_forced_tree_is_returned() {
        let g = example_one();
        let ids = [
            g.find_edge(1, 4).unwrap(),
            g.find_edge(3, 4).unwrap(),
            g.find_edge(2, 3).unwrap(),
        ];
        let r = kruskal_mst(&g, &set(&g, &ids), &set(&g, &[])).unwrap();
        assert_eq!(r.tree, Tree::from_edges(&g, &ids).unwrap());
        assert_eq!(r.trench_cost, 20);
    }

    #[test]
    fn infeasible_restrictions() {
        let g = example_one();
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(
            kruskal_mst(&g, &set(&g, &all), &set(&g, &[])),
            Err(GraphError::Infeasible)
        );
        assert_eq!(
            kruskal_mst(&g, &set(&g, &[]), &set(&g, &[0, 1])),
            Err(GraphError::Infeasible)
        );
        assert_eq!(
            kruskal_mst(&g, &set(&g, &[0]), &set(&g, &[0])),
            Err(GraphError::ConflictingRestrictions)
        );
    }
}
