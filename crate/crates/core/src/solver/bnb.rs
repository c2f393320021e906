//! Depth-first branch-and-bound over edge inclusion decisions.
//!
//! A node fixes some edges into the tree (`forced`) and some out of it
//! (`forbidden`). Its bounds are
//!
//! * trench: the minimum spanning tree honoring both sets;
//! * cable: a path-cost bound over the components of the forced forest. The
//!   component holding the root contributes its exact forced depths. Any other
//!   component `C` is entered through a single vertex `u`, after which every
//!   member is reached along forced edges, so it contributes at least
//!   `min_u |C| * entry(u) + sum_{w in C} forced_dist(u, w)`, where `entry(u)`
//!   is the cheapest shortest-path distance to a neighbor outside `C` plus the
//!   connecting cable cost. Singleton components reduce this to the plain
//!   shortest-path distance.
//!
//! Two feasible trees are scored at every node to tighten the incumbent: the
//! constrained MST and a shortest-path completion grown from the root
//! component that attaches whole forced components at a time. The branching
//! edge is the undecided completion edge with the largest trench cost.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{epsilon_cut_filter, SubproblemSpec, Weights};
use crate::graph::{
    dijkstra_masked, kruskal_edges, EdgeSetEvaluator, Graph, ObjectivePoint, Tree, UnionFind,
};

/// A search node: fixed edge decisions plus lower bounds valid for every
/// spanning tree that completes them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnbNode {
    pub forced: FixedBitSet,
    pub forbidden: FixedBitSet,
    pub bound_gamma: i64,
    pub bound_tau: i64,
    branch_edge: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubproblemOutcome {
    Optimal {
        tree: Tree,
        point: ObjectivePoint,
        objective: i128,
    },
    Infeasible,
    /// The deadline passed; the best tree found so far is not proven optimal.
    TimedOut {
        incumbent: Option<(Tree, ObjectivePoint)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubproblemResult {
    pub outcome: SubproblemOutcome,
    pub nodes: u64,
    /// Edges removed up front by the epsilon-cut.
    pub cut_filtered_edges: usize,
}

/// Minimizes `scale * cable + trench` over spanning trees with
/// `trench <= epsilon`.
pub fn solve_subproblem(g: &Graph, spec: &SubproblemSpec) -> SubproblemResult {
    let excluded = if spec.cut_enabled {
        let mut admissible = epsilon_cut_filter(g, spec.epsilon);
        admissible.toggle_range(..);
        admissible
    } else {
        FixedBitSet::with_capacity(g.m())
    };
    let weights = Weights::new(spec.scaling.scale, 1);
    let search = Search::new(g, weights, Some(spec.epsilon), spec.deadline);
    let mut result = search.run(&excluded, spec.incumbent_hint.as_ref());
    result.cut_filtered_edges = excluded.count_ones(..);
    result
}

/// Generic weighted search used by the frontier loop, the lexicographic
/// trench-first solve and the weighted-sum routine.
pub(crate) fn minimize(
    g: &Graph,
    weights: Weights,
    budget: Option<i64>,
    deadline: Option<Instant>,
) -> SubproblemResult {
    let excluded = FixedBitSet::with_capacity(g.m());
    Search::new(g, weights, budget, deadline).run(&excluded, None)
}

struct Incumbent {
    edges: Vec<usize>,
    point: ObjectivePoint,
    value: i128,
}

struct Search<'g> {
    g: &'g Graph,
    weights: Weights,
    budget: Option<i64>,
    deadline: Option<Instant>,
    incumbent: Option<Incumbent>,
    nodes: u64,
    scratch: Scratch,
    eval: EdgeSetEvaluator,
}

/// Per-node working buffers, reused across nodes.
struct Scratch {
    comp: Vec<usize>,
    members: Vec<Vec<usize>>,
    forced_adj: Vec<Vec<(usize, i64)>>,
    allowed: FixedBitSet,
    in_tree: Vec<bool>,
    depth: Vec<i64>,
    down: Vec<i64>,
    size: Vec<i64>,
    order: Vec<usize>,
    parent: Vec<usize>,
}

struct NodeEval {
    bound_gamma: i64,
    bound_tau: i64,
    branch_edge: Option<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, weights: Weights, budget: Option<i64>, deadline: Option<Instant>) -> Self {
        let n = g.n();
        Search {
            g,
            weights,
            budget,
            deadline,
            incumbent: None,
            nodes: 0,
            scratch: Scratch {
                comp: vec![0; n + 1],
                members: vec![Vec::new(); n + 1],
                forced_adj: vec![Vec::new(); n + 1],
                allowed: FixedBitSet::with_capacity(g.m()),
                in_tree: vec![false; n + 1],
                depth: vec![0; n + 1],
                down: vec![0; n + 1],
                size: vec![0; n + 1],
                order: Vec::with_capacity(n),
                parent: vec![0; n + 1],
            },
            eval: EdgeSetEvaluator::new(g),
        }
    }

    fn within_budget(&self, trench: i64) -> bool {
        self.budget.is_none_or(|b| trench <= b)
    }

    fn offer(&mut self, edges: &[usize], point: ObjectivePoint) {
        if !self.within_budget(point.trench) {
            return;
        }
        let value = self.weights.apply(point);
        if self.incumbent.as_ref().is_none_or(|inc| value < inc.value) {
            self.incumbent = Some(Incumbent {
                edges: edges.to_vec(),
                point,
                value,
            });
        }
    }

    fn bound_value(&self, gamma: i64, tau: i64) -> i128 {
        self.weights.apply(ObjectivePoint::new(gamma, tau))
    }

    fn prunable(&self, gamma: i64, tau: i64) -> bool {
        !self.within_budget(tau)
            || self
                .incumbent
                .as_ref()
                .is_some_and(|inc| self.bound_value(gamma, tau) >= inc.value)
    }

    fn timed_out(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn run(mut self, excluded: &FixedBitSet, hint: Option<&Tree>) -> SubproblemResult {
        let g = self.g;
        let empty = FixedBitSet::with_capacity(g.m());
        if let Some((edges, _)) = kruskal_edges(g, &empty, excluded) {
            let p = self.eval.eval(g, &edges);
            self.offer(&edges, p);
        }
        if let Some(t) = hint {
            if t.edges().iter().all(|&i| !excluded.contains(i)) {
                let p = self.eval.eval(g, t.edges());
                self.offer(t.edges(), p);
            }
        }

        let mut stack: Vec<BnbNode> = Vec::new();
        if let Some(root) = self.make_node(empty, excluded.clone()) {
            stack.push(root);
        }
        let mut timed_out = false;
        while let Some(node) = stack.pop() {
            if self.timed_out() {
                timed_out = true;
                break;
            }
            if self.prunable(node.bound_gamma, node.bound_tau) {
                continue;
            }
            let Some(e) = node.branch_edge else {
                continue;
            };
            let mut forbid_forbidden = node.forbidden.clone();
            forbid_forbidden.insert(e);
            let forbid = self.make_node(node.forced.clone(), forbid_forbidden);
            let mut force_forced = node.forced;
            force_forced.insert(e);
            let force = self.make_node(force_forced, node.forbidden);
            // the better bound is explored first
            let mut children: Vec<BnbNode> = forbid.into_iter().chain(force).collect();
            children.sort_by_key(|c| {
                Reverse((self.bound_value(c.bound_gamma, c.bound_tau), c.bound_tau))
            });
            stack.extend(children);
        }

        let nodes = self.nodes;
        let outcome = match (self.incumbent, timed_out) {
            (Some(inc), false) => SubproblemOutcome::Optimal {
                tree: Tree::from_edges(g, &inc.edges).expect("incumbent is a spanning tree"),
                point: inc.point,
                objective: inc.value,
            },
            (None, false) => SubproblemOutcome::Infeasible,
            (inc, true) => SubproblemOutcome::TimedOut {
                incumbent: inc.map(|inc| {
                    (
                        Tree::from_edges(g, &inc.edges).expect("incumbent is a spanning tree"),
                        inc.point,
                    )
                }),
            },
        };
        SubproblemResult {
            outcome,
            nodes,
            cut_filtered_edges: 0,
        }
    }

    /// Bounds a node, offers its candidate trees, and returns it unless it is
    /// infeasible or already pruned.
    fn make_node(&mut self, forced: FixedBitSet, forbidden: FixedBitSet) -> Option<BnbNode> {
        self.nodes += 1;
        let eval = self.evaluate(&forced, &forbidden)?;
        if self.prunable(eval.bound_gamma, eval.bound_tau) {
            return None;
        }
        Some(BnbNode {
            forced,
            forbidden,
            bound_gamma: eval.bound_gamma,
            bound_tau: eval.bound_tau,
            branch_edge: eval.branch_edge,
        })
    }

    fn evaluate(&mut self, forced: &FixedBitSet, forbidden: &FixedBitSet) -> Option<NodeEval> {
        let g = self.g;
        let n = g.n();
        let root = g.root();

        let (mst_edges, bound_tau) = kruskal_edges(g, forced, forbidden)?;
        if !self.within_budget(bound_tau) {
            return Some(NodeEval {
                bound_gamma: 0,
                bound_tau,
                branch_edge: None,
            });
        }
        let mst_point = self.eval.eval(g, &mst_edges);
        self.offer(&mst_edges, mst_point);

        let s = &mut self.scratch;

        // forced forest components
        let mut uf = UnionFind::new(n + 1);
        for list in &mut s.forced_adj {
            list.clear();
        }
        for i in forced.ones() {
            let e = g.edge(i);
            uf.union(e.u, e.v);
            s.forced_adj[e.u].push((e.v, e.cable));
            s.forced_adj[e.v].push((e.u, e.cable));
        }
        for list in &mut s.members {
            list.clear();
        }
        for v in 1..=n {
            s.comp[v] = uf.find(v);
            s.members[s.comp[v]].push(v);
        }

        // usable edges: not forbidden, and no chord inside a forced component
        s.allowed.clear();
        for (i, e) in g.edges().iter().enumerate() {
            if !forbidden.contains(i) && (forced.contains(i) || s.comp[e.u] != s.comp[e.v]) {
                s.allowed.insert(i);
            }
        }
        let dist = dijkstra_masked(g, &s.allowed);

        let mut bound_gamma = 0i64;
        for c in 1..=n {
            if s.members[c].is_empty() {
                continue;
            }
            let k = s.members[c].len() as i64;
            // orient the component from the root if it holds it
            let start = if s.comp[root] == c {
                root
            } else {
                s.members[c][0]
            };
            s.order.clear();
            s.order.push(start);
            s.depth[start] = 0;
            s.parent[start] = 0;
            let mut head = 0;
            while head < s.order.len() {
                let x = s.order[head];
                head += 1;
                for j in 0..s.forced_adj[x].len() {
                    let (y, w) = s.forced_adj[x][j];
                    if y != s.parent[x] {
                        s.parent[y] = x;
                        s.depth[y] = s.depth[x] + w;
                        s.order.push(y);
                    }
                }
            }
            if start == root {
                bound_gamma += s.order.iter().map(|&v| s.depth[v]).sum::<i64>();
                continue;
            }
            // sum of forced distances from every member, by rerooting
            for &v in &s.order {
                s.size[v] = 1;
            }
            for idx in (1..s.order.len()).rev() {
                let v = s.order[idx];
                s.size[s.parent[v]] += s.size[v];
            }
            s.down[start] = s.order.iter().map(|&v| s.depth[v]).sum();
            for idx in 1..s.order.len() {
                let v = s.order[idx];
                let p = s.parent[v];
                let w = s.depth[v] - s.depth[p];
                s.down[v] = s.down[p] + w * (k - 2 * s.size[v]);
            }
            let mut best: Option<i64> = None;
            for &u in &s.order {
                let mut entry: Option<i64> = None;
                for &(x, i) in g.neighbors(u) {
                    if !s.allowed.contains(i) || s.comp[x] == c {
                        continue;
                    }
                    if let Some(dx) = dist[x] {
                        let cand = dx + g.edge(i).cable;
                        entry = Some(entry.map_or(cand, |e: i64| e.min(cand)));
                    }
                }
                if let Some(entry) = entry {
                    let cand = k * entry + s.down[u];
                    best = Some(best.map_or(cand, |b: i64| b.min(cand)));
                }
            }
            bound_gamma += best.expect("feasible node attaches every component");
        }

        // shortest-path completion: grow from the root component, attaching
        // whole forced components through their cheapest entry
        s.in_tree.iter_mut().for_each(|b| *b = false);
        let mut heap: BinaryHeap<Reverse<(i64, i64, usize, usize)>> = BinaryHeap::new();
        let mut completion: Vec<usize> = forced.ones().collect();
        let mut chosen_free: Vec<usize> = Vec::new();
        let attach = |s: &mut Scratch,
                      heap: &mut BinaryHeap<Reverse<(i64, i64, usize, usize)>>,
                      start: usize,
                      start_depth: i64| {
            s.order.clear();
            s.order.push(start);
            s.in_tree[start] = true;
            s.depth[start] = start_depth;
            let mut head = 0;
            while head < s.order.len() {
                let x = s.order[head];
                head += 1;
                for j in 0..s.forced_adj[x].len() {
                    let (y, w) = s.forced_adj[x][j];
                    if !s.in_tree[y] {
                        s.in_tree[y] = true;
                        s.depth[y] = s.depth[x] + w;
                        s.order.push(y);
                    }
                }
            }
            for &x in &s.order {
                for &(y, i) in g.neighbors(x) {
                    if !s.in_tree[y] && s.allowed.contains(i) && !forced.contains(i) {
                        let e = g.edge(i);
                        heap.push(Reverse((s.depth[x] + e.cable, e.trench, i, y)));
                    }
                }
            }
        };
        attach(s, &mut heap, root, 0);
        while let Some(Reverse((d, _, i, y))) = heap.pop() {
            if s.in_tree[y] {
                continue;
            }
            chosen_free.push(i);
            attach(s, &mut heap, y, d);
        }
        completion.extend_from_slice(&chosen_free);
        debug_assert_eq!(completion.len(), n - 1);

        let branch_edge = chosen_free
            .iter()
            .copied()
            .max_by_key(|&i| (g.edge(i).trench, Reverse(i)));
        let completion_point = self.eval.eval(g, &completion);
        self.offer(&completion, completion_point);

        Some(NodeEval {
            bound_gamma,
            bound_tau,
            branch_edge,
        })
    }
}
