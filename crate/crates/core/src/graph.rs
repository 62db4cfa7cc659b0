//! Finite presentations of amplified graphs.
//!
//! In an amplified graph every edge bundle `v E¹ w` is either empty or
//! infinite, so the whole edge structure is a boolean relation on vertices.
//! `adj[v][w] == true` stands for an infinite bundle of parallel edges.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bits::BoolMatrix;

/// Dense vertex index, `0..vertex_count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateName(String),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Vertex names accepted by the text format: `[A-Za-z0-9_]+`.
pub fn is_token(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

#[derive(Clone, PartialEq, Eq)]
pub struct AmplifiedGraph {
    names: Vec<String>,
    adj: BoolMatrix,
}

impl AmplifiedGraph {
    /// Edgeless graph on the given vertex names.
    ///
    /// Names are only required to be non-empty and unique here; derived
    /// graphs (skew windows, reconstructions) use names outside the
    /// text-format token alphabet.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(GraphError::InvalidName(name.clone()));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(GraphError::DuplicateName(name.clone()));
            }
        }
        let n = names.len();
        Ok(AmplifiedGraph {
            names,
            adj: BoolMatrix::zero(n),
        })
    }

    /// Graph on vertices named `v0 .. v(n-1)` with the given adjacency.
    pub fn from_adjacency(adj: BoolMatrix) -> Self {
        let names = (0..adj.dim()).map(|i| format!("v{i}")).collect();
        AmplifiedGraph { names, adj }
    }

    /// Graph on `n` default-named vertices whose edges are read from the
    /// low `n²` bits of `code`, row-major (`bit v*n + w` is `v → w`).
    pub fn from_code(n: usize, code: u64) -> Self {
        assert!(
            n * n <= 64,
            "adjacency code only covers graphs on at most 8 vertices"
        );
        let mut adj = BoolMatrix::zero(n);
        for v in 0..n {
            for w in 0..n {
                if code >> (v * n + w) & 1 == 1 {
                    adj.set(v, w, true);
                }
            }
        }
        AmplifiedGraph::from_adjacency(adj)
    }

    pub fn with_edges(names: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut g = AmplifiedGraph::new(names.iter().copied())?;
        for &(s, t) in edges {
            let s = g.vertex(s)?;
            let t = g.vertex(t)?;
            g.add_edge(s, t);
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + Clone {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(VertexId)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_owned()))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, v: VertexId, w: VertexId) -> bool {
        self.adj.get(v.0, w.0)
    }

    /// Marks `v E¹ w` as infinite. Idempotent.
    pub fn add_edge(&mut self, v: VertexId, w: VertexId) {
        self.adj.set(v.0, w.0, true);
    }

    pub fn adjacency(&self) -> &BoolMatrix {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count_ones()
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |v| self.adj.row(v.0).iter().map(move |w| (v, VertexId(w))))
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.row(v.0).iter().map(VertexId)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.adj.row(v.0).count()
    }

    pub fn in_degree(&self, w: VertexId) -> usize {
        self.vertices().filter(|&v| self.has_edge(v, w)).count()
    }

    /// Same graph with the adjacency replaced; names are kept.
    pub(crate) fn with_adjacency(&self, adj: BoolMatrix) -> Self {
        assert_eq!(adj.dim(), self.vertex_count());
        AmplifiedGraph {
            names: self.names.clone(),
            adj,
        }
    }

    /// Subgraph `(C, C E¹ C)` induced on `vertices`, listed in the given
    /// order. Returns the subgraph and the map from its indices back into
    /// `self`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (AmplifiedGraph, Vec<VertexId>) {
        let mut adj = BoolMatrix::zero(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate() {
                if self.has_edge(v, w) {
                    adj.set(i, j, true);
                }
            }
        }
        let names = vertices.iter().map(|&v| self.names[v.0].clone()).collect();
        (AmplifiedGraph { names, adj }, vertices.to_vec())
    }

    /// Relabels through a bijection `perm: self⁰ → self⁰`; vertex `v` of
    /// `self` becomes vertex `perm[v]` of the result.
    pub fn permuted(&self, perm: &[VertexId]) -> AmplifiedGraph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        let mut adj = BoolMatrix::zero(n);
        for v in self.vertices() {
            names[perm[v.0].0] = self.names[v.0].clone();
            for w in self.successors(v) {
                adj.set(perm[v.0].0, perm[w.0].0, true);
            }
        }
        AmplifiedGraph { names, adj }
    }
}

impl fmt::Debug for AmplifiedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(v, w)| format!("{}->{}", self.name(v), self.name(w)))
            .collect();
        f.debug_struct("AmplifiedGraph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}
