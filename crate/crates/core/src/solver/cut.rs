use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Largest trench cost an edge may have and still appear in a tree of trench
/// cost at most `epsilon`: `epsilon` minus the `n - 2` cheapest trench costs.
pub fn cut_threshold(g: &Graph, epsilon: i64) -> i64 {
    let cheapest: i64 = g
        .edges_by_trench()
        .iter()
        .take(g.n() - 2)
        .map(|&i| g.edge(i).trench)
        .sum();
    epsilon - cheapest
}

/// Edges that survive the epsilon-cut.
///
/// A tree through `e` costs at least `trench(e)` plus the `n - 2` cheapest
/// costs (when `e` is not among them) or at least the `n - 1` cheapest (when
/// it is), so an edge above [`cut_threshold`] is in no tree within budget.
pub fn epsilon_cut_filter(g: &Graph, epsilon: i64) -> FixedBitSet {
    let threshold = cut_threshold(g, epsilon);
    let mut admissible = FixedBitSet::with_capacity(g.m());
    for (i, e) in g.edges().iter().enumerate() {
        if e.trench <= threshold {
            admissible.insert(i);
        }
    }
    admissible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_one() -> Graph {
        Graph::ctp(4, &[(1, 2, 5), (1, 4, 10), (2, 3, 6), (3, 4, 4)]).unwrap()
    }

    #[test]
    fn loose_budget_keeps_everything() {
        let g = example_one();
        assert_eq!(cut_threshold(&g, 20), 11);
        assert_eq!(epsilon_cut_filter(&g, 20).count_ones(..), 4);
    }

    #[test]
    fn tighter_budget_drops_the_long_edge() {
        let g = example_one();
        assert_eq!(cut_threshold(&g, 18), 9);
        let kept = epsilon_cut_filter(&g, 18);
        assert_eq!(kept.count_ones(..), 3);
        assert!(!kept.contains(g.find_edge(1, 4).unwrap()));
    }

    #[test]
    fn hopeless_budget_keeps_nothing() {
        let g = example_one();
        // 9 for the two cheapest plus the cheapest edge 4
        assert_eq!(epsilon_cut_filter(&g, 12).count_ones(..), 0);
    }

    #[test]
    fn two_vertices_use_the_raw_budget() {
        let g = Graph::ctp(2, &[(1, 2, 7)]).unwrap();
        assert_eq!(cut_threshold(&g, 7), 7);
        assert_eq!(epsilon_cut_filter(&g, 6).count_ones(..), 0);
    }
}
