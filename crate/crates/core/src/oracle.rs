//! Brute-force ground truth: enumerate every spanning tree and keep the
//! non-dominated outcomes.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{dominance_filter, EdgeSetEvaluator, FrontierPoint, Graph, Tree};
use crate::{Frontier, ObjectivePoint};

/// Cap on the number of spanning trees a single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    max_trees: u64,
}

impl EnumerationBudget {
    pub const DEFAULT_MAX_TREES: u64 = 5_000_000;

    pub fn new(max_trees: u64) -> Option<Self> {
        (max_trees >= 1).then_some(EnumerationBudget { max_trees })
    }

    pub fn max_trees(&self) -> u64 {
        self.max_trees
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_trees: Self::DEFAULT_MAX_TREES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("more than {delivered} spanning trees; enumeration stopped")]
    BudgetExceeded { delivered: u64 },
}

/// Calls `visit` with the sorted edge indices of every spanning tree of `g`,
/// each exactly once, and returns the number of trees.
///
/// Trees are produced by include/exclude recursion over ascending edge
/// indices: the include branch is taken first whenever the edge joins two
/// components, and the exclude branch only while the remaining edges can
/// still connect the graph. When the budget runs out the trees delivered so
/// far stand and `BudgetExceeded` is returned.
pub fn for_each_spanning_tree<F>(
    g: &Graph,
    budget: EnumerationBudget,
    mut visit: F,
) -> Result<u64, OracleError>
where
    F: FnMut(&[usize]),
{
    let mut walk = Walk {
        g,
        uf: RollbackUnionFind::new(g.n() + 1),
        chosen: Vec::with_capacity(g.n() - 1),
        delivered: 0,
        max: budget.max_trees,
        exhausted: false,
        scratch: Vec::with_capacity(g.n() + 1),
    };
    walk.recurse(0, &mut visit);
    if walk.exhausted {
        Err(OracleError::BudgetExceeded {
            delivered: walk.delivered,
        })
    } else {
        Ok(walk.delivered)
    }
}

/// Collects every spanning tree of `g` in enumeration order.
pub fn enumerate_spanning_trees(
    g: &Graph,
    budget: EnumerationBudget,
) -> Result<Vec<Tree>, OracleError> {
    let mut trees = Vec::new();
    for_each_spanning_tree(g, budget, |ids| {
        trees.push(Tree::from_edges(g, ids).expect("enumerated set is a spanning tree"));
    })?;
    Ok(trees)
}

/// The exact non-dominated set; each point's witness is the first tree in
/// enumeration order that attains it.
pub fn exact_frontier(g: &Graph, budget: EnumerationBudget) -> Result<Frontier, OracleError> {
    let mut eval = EdgeSetEvaluator::new(g);
    let mut first_witness: HashMap<ObjectivePoint, (u64, Vec<usize>)> = HashMap::new();
    let mut counter = 0u64;
    for_each_spanning_tree(g, budget, |ids| {
        let p = eval.eval(g, ids);
        first_witness
            .entry(p)
            .or_insert_with(|| (counter, ids.to_vec()));
        counter += 1;
    })?;
    let mut candidates: Vec<(u64, ObjectivePoint, Vec<usize>)> = first_witness
        .into_iter()
        .map(|(p, (k, ids))| (k, p, ids))
        .collect();
    candidates.sort_by_key(|c| c.0);
    Ok(dominance_filter(candidates.into_iter().map(
        |(_, point, ids)| FrontierPoint {
            point,
            tree: Tree::from_edges(g, &ids).expect("enumerated set is a spanning tree"),
        },
    )))
}

/// Union-find without path compression so that unions can be undone.
#[derive(Debug, Clone)]
struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    fn undo(&mut self) {
        let b = self.history.pop().expect("undo without union");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

struct Walk<'g> {
    g: &'g Graph,
    uf: RollbackUnionFind,
    chosen: Vec<usize>,
    delivered: u64,
    max: u64,
    exhausted: bool,
    scratch: Vec<usize>,
}

impl Walk<'_> {
    fn recurse<F: FnMut(&[usize])>(&mut self, i: usize, visit: &mut F) {
        if self.exhausted {
            return;
        }
        if self.chosen.len() == self.g.n() - 1 {
            if self.delivered == self.max {
                self.exhausted = true;
                return;
            }
            self.delivered += 1;
            visit(&self.chosen);
            return;
        }
        if i == self.g.m() {
            return;
        }
        let e = *self.g.edge(i);
        if self.uf.union(e.u, e.v) {
            self.chosen.push(i);
            self.recurse(i + 1, visit);
            self.chosen.pop();
            self.uf.undo();
        }
        if self.still_connectable(i + 1) {
            self.recurse(i + 1, visit);
        }
    }

    /// Whether the chosen edges plus edges `from..` connect every vertex.
    fn still_connectable(&mut self, from: usize) -> bool {
        let n = self.g.n();
        // map current components onto a fresh union-find
        self.scratch.clear();
        self.scratch.extend((0..=n).map(|v| self.uf.find(v)));
        let mut uf = crate::graph::UnionFind::new(n + 1);
        let mut components = n - self.chosen.len();
        for e in &self.g.edges()[from..] {
            if uf.union(self.scratch[e.u], self.scratch[e.v]) {
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }
}
