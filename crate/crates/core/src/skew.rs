//! The skew product `E ×₁ ℤ` and its principal hereditary sets.
//!
//! `E ×₁ ℤ` has vertices `E⁰ × ℤ` and an edge `(v, n) → (w, n + 1)` for each
//! edge `v → w` of `E`. It is acyclic, so the principal hereditary sets
//! `H(v, n)` are pairwise distinct and are represented symbolically by the
//! pair `(v, n)`. Containment between them is decided by
//!
//! ```text
//! H(w, n) ⊆ H(v, m)  ⇔  v E^{n-m} w ≠ ∅
//! ```
//!
//! The finite routines at the bottom of this module (windows, hereditary-set
//! enumeration, unique predecessors) are brute-force oracles for checking
//! the symbolic layer.

use std::fmt;

use thiserror::Error;

use crate::bits::BitSet;
use crate::graph::{AmplifiedGraph, GraphError, VertexId};
use crate::reach::ReachabilityTable;

/// Largest vertex count accepted by [`enumerate_hereditary`].
pub const MAX_ENUMERATION_VERTICES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("empty level range [{lo}, {hi}]")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("level {level} lies outside the window [{lo}, {hi}]")]
    LevelOutsideWindow { level: i64, lo: i64, hi: i64 },
    #[error("vertex {vertex} does not belong to a base graph on {count} vertices")]
    ForeignVertex { vertex: VertexId, count: usize },
    #[error(
        "hereditary-set enumeration is capped at {MAX_ENUMERATION_VERTICES} vertices, got {0}"
    )]
    TooManyVertices(usize),
    #[error("vertex set is not hereditary: edge {0} -> {1} leaves it")]
    NotHereditary(VertexId, VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `H(v, n)`: the smallest hereditary subset of `(E ×₁ ℤ)⁰` containing
/// `(v, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrincipalHereditary {
    pub vertex: VertexId,
    pub level: i64,
}

impl PrincipalHereditary {
    pub fn new(vertex: VertexId, level: i64) -> Self {
        PrincipalHereditary { vertex, level }
    }

    /// `lt_k`: `H(v, n) ↦ H(v, n + k)`.
    #[must_use]
    pub fn translate(self, k: i64) -> Self {
        PrincipalHereditary {
            vertex: self.vertex,
            level: self.level + k,
        }
    }

    /// Whether `H(v, n)` lies in `H₀` but not in `lt₁(H₀)`. Since
    /// `H(v, n) ⊆ H₀ ⇔ n ≥ 0`, this holds exactly at level zero.
    pub fn in_vertex_window(self) -> bool {
        self.level == 0
    }
}

impl fmt::Display for PrincipalHereditary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({}, {})", self.vertex.0, self.level)
    }
}

pub fn translate(h: PrincipalHereditary, k: i64) -> PrincipalHereditary {
    h.translate(k)
}

pub fn in_vertex_window(h: PrincipalHereditary) -> bool {
    h.in_vertex_window()
}

/// `inner ⊆ outer` for principal hereditary sets of the same base graph,
/// given that graph's reachability table.
pub fn principal_contains(
    table: &ReachabilityTable,
    inner: PrincipalHereditary,
    outer: PrincipalHereditary,
) -> Result<bool, SkewError> {
    let count = table.vertex_count();
    for h in [inner, outer] {
        if h.vertex.0 >= count {
            return Err(SkewError::ForeignVertex {
                vertex: h.vertex,
                count,
            });
        }
    }
    Ok(table.exact_reach(outer.vertex, inner.vertex, inner.level - outer.level))
}

/// The band `E⁰ × {lo..=hi}` of the skew product as a finite acyclic graph.
#[derive(Clone, Debug)]
pub struct SkewWindow {
    lo: i64,
    hi: i64,
    base_count: usize,
    graph: AmplifiedGraph,
}

impl SkewWindow {
    pub fn levels(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn graph(&self) -> &AmplifiedGraph {
        &self.graph
    }

    /// Window vertex for `(v, level)`.
    pub fn vertex(&self, v: VertexId, level: i64) -> Option<VertexId> {
        if v.0 >= self.base_count || level < self.lo || level > self.hi {
            return None;
        }
        Some(VertexId((level - self.lo) as usize * self.base_count + v.0))
    }

    /// Inverse of [`SkewWindow::vertex`].
    pub fn locate(&self, x: VertexId) -> (VertexId, i64) {
        let n = self.base_count;
        (VertexId(x.0 % n), self.lo + (x.0 / n) as i64)
    }
}

/// Vertices are named `<name>@<level>` and stored level by level.
pub fn skew_window(base: &AmplifiedGraph, lo: i64, hi: i64) -> Result<SkewWindow, SkewError> {
    if lo > hi {
        return Err(SkewError::EmptyWindow { lo, hi });
    }
    let names = (lo..=hi).flat_map(|k| base.names().iter().map(move |n| format!("{n}@{k}")));
    let mut graph = AmplifiedGraph::new(names)?;
    let n = base.vertex_count();
    for k in 0..(hi - lo) as usize {
        for (v, w) in base.edges() {
            graph.add_edge(VertexId(k * n + v.0), VertexId((k + 1) * n + w.0));
        }
    }
    Ok(SkewWindow {
        lo,
        hi,
        base_count: n,
        graph,
    })
}

/// A hereditary vertex set of a finite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteHereditarySet {
    members: BitSet,
}

impl FiniteHereditarySet {
    pub fn new(graph: &AmplifiedGraph, members: BitSet) -> Result<Self, SkewError> {
        assert_eq!(members.len(), graph.vertex_count(), "bitset width mismatch");
        if let Some((v, w)) = graph
            .edges()
            .find(|&(v, w)| members.contains(v.0) && !members.contains(w.0))
        {
            return Err(SkewError::NotHereditary(v, w));
        }
        Ok(FiniteHereditarySet { members })
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(v.0)
    }

    pub fn is_subset(&self, other: &FiniteHereditarySet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().map(VertexId)
    }
}

/// Every hereditary subset of `graph`, in increasing bitmask order
/// (bit `i` is vertex `i`). Checks all `2^n` subsets directly.
pub fn enumerate_hereditary(graph: &AmplifiedGraph) -> Result<Vec<FiniteHereditarySet>, SkewError> {
    let n = graph.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(SkewError::TooManyVertices(n));
    }
    let succ_masks: Vec<u32> = graph
        .vertices()
        .map(|v| graph.successors(v).fold(0u32, |m, w| m | 1 << w.0))
        .collect();
    let out = (0u32..1 << n)
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 0 || succ_masks[v] & !mask == 0))
        .map(|mask| FiniteHereditarySet {
            members: BitSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1)),
        })
        .collect();
    Ok(out)
}

/// Elements `L` with some `K ⊊ L` that contains every other `K' ⊊ L`,
/// found by comparing all pairs.
pub fn unique_predecessor_elements(lattice: &[FiniteHereditarySet]) -> Vec<FiniteHereditarySet> {
    let proper = |k: &FiniteHereditarySet, l: &FiniteHereditarySet| k != l && k.is_subset(l);
    lattice
        .iter()
        .filter(|l| {
            let below: Vec<&FiniteHereditarySet> =
                lattice.iter().filter(|k| proper(k, l)).collect();
            below.iter().any(|k| below.iter().all(|k2| k2.is_subset(k)))
        })
        .cloned()
        .collect()
}

/// Vertices reachable from `v` in the finite graph itself: the principal
/// hereditary subset of `graph` generated by `v`.
pub fn finite_principal(graph: &AmplifiedGraph, v: VertexId) -> FiniteHereditarySet {
    let n = graph.vertex_count();
    let mut seen = BitSet::new(n);
    let mut stack = vec![v];
    seen.insert(v.0);
    while let Some(x) = stack.pop() {
        for y in graph.successors(x) {
            if !seen.contains(y.0) {
                seen.insert(y.0);
                stack.push(y);
            }
        }
    }
    FiniteHereditarySet { members: seen }
}

/// `H(v, n) ∩ (E⁰ × {lo..=hi})` as a hereditary set of the window graph.
pub fn principal_set_members(
    table: &ReachabilityTable,
    window: &SkewWindow,
    h: PrincipalHereditary,
) -> Result<FiniteHereditarySet, SkewError> {
    let (lo, hi) = window.levels();
    if h.level < lo || h.level > hi {
        return Err(SkewError::LevelOutsideWindow {
            level: h.level,
            lo,
            hi,
        });
    }
    let count = table.vertex_count();
    if h.vertex.0 >= count || count != window.base_count {
        return Err(SkewError::ForeignVertex {
            vertex: h.vertex,
            count,
        });
    }
    let mut members = BitSet::new(window.graph.vertex_count());
    for k in h.level..=hi {
        for w in 0..count {
            if table.exact_reach(h.vertex, VertexId(w), k - h.level) {
                let x = window.vertex(VertexId(w), k).expect("inside window");
                members.insert(x.0);
            }
        }
    }
    Ok(FiniteHereditarySet { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reach::build_reachability;

    fn g(names: &[&str], edges: &[(&str, &str)]) -> AmplifiedGraph {
        AmplifiedGraph::with_edges(names, edges).unwrap()
    }

    fn sets(lattice: &[FiniteHereditarySet]) -> Vec<Vec<usize>> {
        lattice
            .iter()
            .map(|h| h.members().iter().collect())
            .collect()
    }

    fn h(v: usize, n: i64) -> PrincipalHereditary {
        PrincipalHereditary::new(VertexId(v), n)
    }

    #[test]
    fn window_of_single_edge() {
        let w = skew_window(&g(&["a", "b"], &[("a", "b")]), 0, 1).unwrap();
        assert_eq!(w.graph().vertex_count(), 4);
        assert_eq!(w.graph().names(), &["a@0", "b@0", "a@1", "b@1"]);
        let edges: Vec<_> = w.graph().edges().collect();
        assert_eq!(edges, vec![(VertexId(0), VertexId(3))]);
    }

    #[test]
    fn window_unrolls_loop() {
        let w = skew_window(&g(&["a"], &[("a", "a")]), 0, 2).unwrap();
        let edges: Vec<_> = w.graph().edges().collect();
        assert_eq!(
            edges,
            vec![(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2))]
        );
        assert!(!w.graph().has_edge(VertexId(0), VertexId(0)));
    }

    #[test]
    fn window_errors_and_trivial_band() {
        let base = g(&["a"], &[]);
        assert_eq!(
            skew_window(&base, 1, 0).unwrap_err(),
            SkewError::EmptyWindow { lo: 1, hi: 0 }
        );
        let w = skew_window(&base, 0, 0).unwrap();
        assert_eq!(w.graph().vertex_count(), 1);
        assert_eq!(w.graph().edge_count(), 0);
        assert_eq!(w.locate(VertexId(0)), (VertexId(0), 0));
    }

    #[test]
    fn translation() {
        assert_eq!(translate(h(0, 0), 1), h(0, 1));
        assert_eq!(translate(h(0, 5), -5), h(0, 0));
        assert_eq!(h(2, 3).translate(4).translate(-1), h(2, 3).translate(3));
    }

    #[test]
    fn vertex_window_is_level_zero() {
        assert!(in_vertex_window(h(0, 0)));
        assert!(!in_vertex_window(h(0, 1)));
        assert!(!in_vertex_window(h(0, -1)));
    }

    #[test]
    fn containment_on_single_edge() {
        let t = build_reachability(&g(&["a", "b"], &[("a", "b")])).unwrap();
        assert!(principal_contains(&t, h(1, 1), h(0, 0)).unwrap());
        assert!(principal_contains(&t, h(0, 4), h(0, 4)).unwrap());
        assert!(!principal_contains(&t, h(0, 1), h(1, 0)).unwrap());
        assert!(matches!(
            principal_contains(&t, h(2, 0), h(0, 0)),
            Err(SkewError::ForeignVertex { .. })
        ));
    }

    #[test]
    fn hereditary_enumeration() {
        assert_eq!(
            sets(&enumerate_hereditary(&g(&["a", "b"], &[("a", "b")])).unwrap()),
            vec![vec![], vec![1], vec![0, 1]]
        );
        assert_eq!(
            sets(&enumerate_hereditary(&g(&["a"], &[])).unwrap()),
            vec![vec![], vec![0]]
        );
        assert_eq!(
            sets(&enumerate_hereditary(&g(&["a", "b", "c"], &[("a", "b"), ("b", "c")])).unwrap()),
            vec![vec![], vec![2], vec![1, 2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn enumeration_cap() {
        let names: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        let big = AmplifiedGraph::new(names).unwrap();
        assert_eq!(
            enumerate_hereditary(&big).unwrap_err(),
            SkewError::TooManyVertices(21)
        );
    }

    #[test]
    fn unique_predecessors() {
        let edge = enumerate_hereditary(&g(&["a", "b"], &[("a", "b")])).unwrap();
        assert_eq!(
            sets(&unique_predecessor_elements(&edge)),
            vec![vec![1], vec![0, 1]]
        );
        let point = enumerate_hereditary(&g(&["a"], &[])).unwrap();
        assert_eq!(sets(&unique_predecessor_elements(&point)), vec![vec![0]]);
        let chain = enumerate_hereditary(&g(&["a", "b", "c"], &[("a", "b"), ("b", "c")])).unwrap();
        assert_eq!(
            sets(&unique_predecessor_elements(&chain)),
            vec![vec![2], vec![1, 2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn two_minimal_elements_have_no_unique_predecessor_for_their_join() {
        // a, b isolated: {a,b} has predecessors {a} and {b}, neither dominates
        let lattice = enumerate_hereditary(&g(&["a", "b"], &[])).unwrap();
        assert_eq!(
            sets(&unique_predecessor_elements(&lattice)),
            vec![vec![0], vec![1]]
        );
    }

    #[test]
    fn members_in_window() {
        let edge = g(&["a", "b"], &[("a", "b")]);
        let t = build_reachability(&edge).unwrap();
        let w = skew_window(&edge, 0, 1).unwrap();
        let m = principal_set_members(&t, &w, h(0, 0)).unwrap();
        assert_eq!(m.members().iter().collect::<Vec<_>>(), vec![0, 3]); // a@0, b@1

        let looped = g(&["a"], &[("a", "a")]);
        let t = build_reachability(&looped).unwrap();
        let w = skew_window(&looped, 0, 2).unwrap();
        let m = principal_set_members(&t, &w, h(0, 0)).unwrap();
        assert_eq!(m.members().count(), 3);

        let point = g(&["a"], &[]);
        let t = build_reachability(&point).unwrap();
        let w = skew_window(&point, 0, 3).unwrap();
        let m = principal_set_members(&t, &w, h(0, 0)).unwrap();
        assert_eq!(m.members().iter().collect::<Vec<_>>(), vec![0]);
        assert!(FiniteHereditarySet::new(w.graph(), m.members().clone()).is_ok());
        assert!(matches!(
            principal_set_members(&t, &w, h(0, 4)),
            Err(SkewError::LevelOutsideWindow { .. })
        ));
    }

    #[test]
    fn non_hereditary_set_rejected() {
        let edge = g(&["a", "b"], &[("a", "b")]);
        assert_eq!(
            FiniteHereditarySet::new(&edge, BitSet::from_indices(2, [0])).unwrap_err(),
            SkewError::NotHereditary(VertexId(0), VertexId(1))
        );
    }
}
