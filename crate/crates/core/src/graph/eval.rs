use super::{Graph, ObjectivePoint, Tree};
use crate::error::GraphError;

/// Evaluates both objectives of a spanning tree.
pub fn eval_tree(g: &Graph, t: &Tree) -> Result<ObjectivePoint, GraphError> {
    check_belongs(g, t)?;
    let cable = cable_cost_by_depth(g, t);
    debug_assert_eq!(cable, cable_cost_by_subtree(g, t));
    let trench = t.edges().iter().map(|&i| g.edge(i).trench).sum();
    Ok(ObjectivePoint::new(cable, trench))
}

/// Sum of root-path cable costs, accumulating depths top-down.
pub fn cable_cost_by_depth(g: &Graph, t: &Tree) -> i64 {
    let mut depth = vec![0i64; g.n() + 1];
    let mut total = 0;
    for &v in &t.bfs_order()[1..] {
        let (p, e) = t.parent(v).expect("non-root vertex without parent");
        depth[v] = depth[p] + g.edge(e).cable;
        total += depth[v];
    }
    total
}

/// Sum of root-path cable costs as `sum_e cable(e) * |subtree below e|`.
pub fn cable_cost_by_subtree(g: &Graph, t: &Tree) -> i64 {
    let mut size = vec![1i64; g.n() + 1];
    let mut total = 0;
    for &v in t.bfs_order()[1..].iter().rev() {
        let (p, e) = t.parent(v).expect("non-root vertex without parent");
        total += g.edge(e).cable * size[v];
        size[p] += size[v];
    }
    total
}

/// Reusable scratch space for scoring raw edge-index sets in hot loops.
#[derive(Debug, Default)]
pub(crate) struct EdgeSetEvaluator {
    incident: Vec<Vec<(usize, i64)>>,
    depth: Vec<i64>,
    seen: Vec<bool>,
    queue: Vec<usize>,
}

impl EdgeSetEvaluator {
    pub(crate) fn new(g: &Graph) -> Self {
        EdgeSetEvaluator {
            incident: vec![Vec::new(); g.n() + 1],
            depth: vec![0; g.n() + 1],
            seen: vec![false; g.n() + 1],
            queue: Vec::with_capacity(g.n()),
        }
    }

    /// Scores `edges`, which must form a spanning tree of `g`.
    pub(crate) fn eval(&mut self, g: &Graph, edges: &[usize]) -> ObjectivePoint {
        for list in &mut self.incident {
            list.clear();
        }
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut trench = 0;
        for &i in edges {
            let e = g.edge(i);
            self.incident[e.u].push((e.v, e.cable));
            self.incident[e.v].push((e.u, e.cable));
            trench += e.trench;
        }
        self.queue.clear();
        self.queue.push(g.root());
        self.seen[g.root()] = true;
        self.depth[g.root()] = 0;
        let mut cable = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for k in 0..self.incident[x].len() {
                let (y, c) = self.incident[x][k];
                if !self.seen[y] {
                    self.seen[y] = true;
                    self.depth[y] = self.depth[x] + c;
                    cable += self.depth[y];
                    self.queue.push(y);
                }
            }
        }
        debug_assert_eq!(self.queue.len(), g.n(), "edge set does not span the graph");
        ObjectivePoint::new(cable, trench)
    }
}

fn check_belongs(g: &Graph, t: &Tree) -> Result<(), GraphError> {
    if t.edges().len() != g.n() - 1 || t.bfs_order().len() != g.n() {
        return Err(GraphError::NotSpanningTree);
    }
    if t.bfs_order()[0] != g.root() {
        return Err(GraphError::NotSpanningTree);
    }
    for &v in &t.bfs_order()[1..] {
        let (p, e) = t.parent(v).ok_or(GraphError::NotSpanningTree)?;
        if e >= g.m() {
            return Err(GraphError::NotSpanningTree);
        }
        let edge = g.edge(e);
        if !((edge.u == p && edge.v == v) || (edge.u == v && edge.v == p)) {
            return Err(GraphError::NotSpanningTree);
        }
    }
    Ok(())
}
