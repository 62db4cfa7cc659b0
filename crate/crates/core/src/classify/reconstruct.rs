use crate::graph::{AmplifiedGraph, VertexId};
use crate::iso::is_isomorphism;
use crate::reach::build_reachability;
use crate::skew::{principal_contains, PrincipalHereditary};

use super::ClassifyError;

/// The graph `Ē` rebuilt from lattice data, with the comparison map
/// `v ↦ H(v, 0)`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    /// Vertices are the level-zero principal sets, named `H(<name>,0)`.
    pub ebar: AmplifiedGraph,
    /// `tokens[i]` is the principal hereditary set behind vertex `i` of `ebar`.
    pub tokens: Vec<PrincipalHereditary>,
    /// `iso[v]` is the vertex of `ebar` that `v` is carried to.
    pub iso: Vec<VertexId>,
    /// Whether `iso` was checked to be an adjacency-preserving bijection.
    pub verified: bool,
}

/// Rebuilds `E` from `(𝓗(E ×₁ ℤ), ⊆, lt, H₀)`.
///
/// `Ē⁰` is the set of principal hereditary sets `H` with `H ⊆ H₀` and
/// `H ⊄ lt₁(H₀)`, i.e. the level-zero tokens. There is an (infinite) edge
/// `H → K` in `Ē` exactly when `lt₁(K) ⊆ H`.
pub fn reconstruct(e: &AmplifiedGraph) -> Result<Reconstruction, ClassifyError> {
    let table = build_reachability(e)?;

    // Levels -1 and 1 bracket the window; only level 0 survives the filter.
    let tokens: Vec<PrincipalHereditary> = e
        .vertices()
        .flat_map(|v| (-1..=1).map(move |n| PrincipalHereditary::new(v, n)))
        .filter(|h| h.in_vertex_window())
        .collect();

    let names = tokens
        .iter()
        .map(|h| format!("H({},{})", e.name(h.vertex), h.level));
    let mut ebar = AmplifiedGraph::new(names)?;
    for (i, &outer) in tokens.iter().enumerate() {
        for (j, &inner) in tokens.iter().enumerate() {
            if principal_contains(&table, inner.translate(1), outer)
                .expect("tokens come from the same graph")
            {
                ebar.add_edge(VertexId(i), VertexId(j));
            }
        }
    }

    let mut iso = vec![VertexId(usize::MAX); e.vertex_count()];
    for (i, h) in tokens.iter().enumerate() {
        iso[h.vertex.0] = VertexId(i);
    }
    let verified = is_isomorphism(e, &ebar, &iso);
    Ok(Reconstruction {
        ebar,
        tokens,
        iso,
        verified,
    })
}
