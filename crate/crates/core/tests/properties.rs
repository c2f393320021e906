use bgctp::graph::{dijkstra_sssp, kruskal_mst};
use bgctp::oracle::{exact_frontier, EnumerationBudget};
use bgctp::solver::{solve_frontier, supported_frontier, FrontierConfig, SupportedConfig};
use bgctp::{eval_tree, Edge, Graph, ObjectivePoint};
use fixedbitset::FixedBitSet;
use proptest::prelude::*;

/// Connected graphs on up to 7 vertices: a random tree plus random chords,
/// with small costs (zero included) so ties are common.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                1..=n,
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec((0i64..=12, 0i64..=12), pairs),
                any::<bool>(),
            )
        })
        .prop_map(|(n, root, parents, extra, costs, plain)| {
            let mut present = std::collections::HashSet::new();
            for (i, p) in parents.iter().enumerate() {
                let v = i + 2;
                present.insert((1 + p.index(v - 1), v));
            }
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if present.contains(&(u, v)) || extra[k] {
                        let (c, t) = costs[k];
                        edges.push(Edge::new(u, v, c, if plain { c } else { t }));
                    }
                    k += 1;
                }
            }
            Graph::new(n, root, edges).unwrap()
        })
}

fn empty(g: &Graph) -> FixedBitSet {
    FixedBitSet::with_capacity(g.m())
}

/// True when `p` lies on or below the segment joining `a` and `b`.
fn not_above_segment(p: ObjectivePoint, a: ObjectivePoint, b: ObjectivePoint) -> bool {
    // weights normal to the segment: l1 * cable + l2 * trench is equal at a and b
    let l1 = (a.trench - b.trench) as i128;
    let l2 = (b.cable - a.cable) as i128;
    let f = |q: ObjectivePoint| l1 * q.cable as i128 + l2 * q.trench as i128;
    f(p) <= f(a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn frontier_matches_enumeration(g in small_graph()) {
        let exact = exact_frontier(&g, EnumerationBudget::default()).unwrap();
        let run = solve_frontier(&g, &FrontierConfig::default()).unwrap();
        prop_assert_eq!(run.frontier.objective_points(), exact.objective_points());
        prop_assert!(!run.report.timed_out);
        for fp in &run.frontier {
            prop_assert_eq!(eval_tree(&g, &fp.tree).unwrap(), fp.point);
        }
    }

    #[test]
    fn cut_never_changes_the_frontier(g in small_graph()) {
        let with = solve_frontier(&g, &FrontierConfig::default()).unwrap();
        let without = solve_frontier(
            &g,
            &FrontierConfig { cut_enabled: false, ..FrontierConfig::default() },
        )
        .unwrap();
        prop_assert_eq!(with.frontier.objective_points(), without.frontier.objective_points());
        prop_assert_eq!(without.report.cut_filtered_edges, 0);
    }

    #[test]
    fn endpoints_are_lexicographic_optima(g in small_graph()) {
        let run = solve_frontier(&g, &FrontierConfig::default()).unwrap();
        let first = run.frontier.first().unwrap().point;
        let last = run.frontier.last().unwrap().point;
        prop_assert_eq!(first.cable, dijkstra_sssp(&g).total());
        prop_assert_eq!(last.trench, kruskal_mst(&g, &empty(&g), &empty(&g)).unwrap().trench_cost);
    }

    #[test]
    fn supported_points_are_extreme_frontier_points(g in small_graph()) {
        let full = solve_frontier(&g, &FrontierConfig::default()).unwrap().frontier;
        let supported = supported_frontier(&g, &SupportedConfig::default()).frontier;
        let all = full.objective_points();
        let sup = supported.objective_points();
        prop_assert!(sup.iter().all(|p| all.contains(p)));
        prop_assert_eq!(sup.first(), all.first());
        prop_assert_eq!(sup.last(), all.last());
        // no frontier point lies strictly below the hull of the supported points
        for w in sup.windows(2) {
            for &p in &all {
                if p.cable > w[0].cable && p.cable < w[1].cable {
                    let l1 = (w[0].trench - w[1].trench) as i128;
                    let l2 = (w[1].cable - w[0].cable) as i128;
                    let f = |q: ObjectivePoint| l1 * q.cable as i128 + l2 * q.trench as i128;
                    prop_assert!(f(p) >= f(w[0]), "{} below hull edge {}-{}", p, w[0], w[1]);
                }
            }
        }
        for p in &sup {
            prop_assert!(not_above_segment(*p, *sup.first().unwrap(), *sup.last().unwrap()));
        }
    }
}
