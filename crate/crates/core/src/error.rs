use thiserror::Error;

/// Errors raised while building or querying a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("root {root} is not a vertex of a graph with {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("edge ({u},{v}) references a vertex outside 1..={n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u},{v}) has a negative cost")]
    NegativeCost { u: usize, v: usize },
    #[error("edge ({u},{v}) has a cost above the 2^40 cap")]
    CostOverflow { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a spanning tree of the graph")]
    NotSpanningTree,
    #[error("an edge is both forced and forbidden")]
    ConflictingRestrictions,
    #[error("no spanning tree satisfies the edge restrictions")]
    Infeasible,
}
