//! The t-move and the amplified transitive closure.

use thiserror::Error;

use crate::graph::{AmplifiedGraph, GraphError, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("t-move needs an infinite bundle {src} -> {dst}, which is empty")]
    MissingEdge { src: String, dst: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Given infinite bundles `u → v` and `v → w`, adds an infinite bundle
/// `u → w`.
pub fn t_move(
    graph: &AmplifiedGraph,
    u: VertexId,
    v: VertexId,
    w: VertexId,
) -> Result<AmplifiedGraph, MoveError> {
    for x in [u, v, w] {
        graph.check_vertex(x)?;
    }
    for (s, t) in [(u, v), (v, w)] {
        if !graph.has_edge(s, t) {
            return Err(MoveError::MissingEdge {
                src: graph.name(s).to_owned(),
                dst: graph.name(t).to_owned(),
            });
        }
    }
    let mut out = graph.clone();
    out.add_edge(u, w);
    Ok(out)
}

/// `tE`: same vertices, with `v → w` whenever a path of length at least one
/// runs from `v` to `w` in `E`.
pub fn amplified_transitive_closure(graph: &AmplifiedGraph) -> AmplifiedGraph {
    graph.with_adjacency(graph.adjacency().transitive_closure())
}

/// Applies t-moves (first eligible triple in lexicographic `(u, v, w)`
/// order) until none adds an edge. Returns the fixpoint and the number of
/// moves that changed the graph.
pub fn t_move_fixpoint(graph: &AmplifiedGraph) -> (AmplifiedGraph, usize) {
    let mut current = graph.clone();
    let mut moves = 0;
    'outer: loop {
        for u in current.vertices() {
            for v in current.successors(u).collect::<Vec<_>>() {
                for w in current.successors(v).collect::<Vec<_>>() {
                    if !current.has_edge(u, w) {
                        current = t_move(&current, u, v, w).expect("eligible triple");
                        moves += 1;
                        continue 'outer;
                    }
                }
            }
        }
        return (current, moves);
    }
}
