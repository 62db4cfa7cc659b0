//! Weakly connected components.

use crate::graph::{AmplifiedGraph, VertexId};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Dense labels `0..k`, numbered by the smallest element of each set.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            labels.push(label_of_root[r]);
        }
        (labels, next)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    component_of: Vec<usize>,
    component_count: usize,
}

impl ComponentPartition {
    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v.0]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn labels(&self) -> &[usize] {
        &self.component_of
    }

    /// Members of each component, in increasing vertex order.
    pub fn members(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c].push(VertexId(v));
        }
        out
    }
}

/// Components of the smallest equivalence relation containing every edge.
/// Component `0` contains vertex `0`; labels increase with each component's
/// smallest vertex.
pub fn weakly_connected_components(graph: &AmplifiedGraph) -> ComponentPartition {
    let mut uf = UnionFind::new(graph.vertex_count());
    for (v, w) in graph.edges() {
        uf.union(v.0, w.0);
    }
    let (component_of, component_count) = uf.labels();
    ComponentPartition {
        component_of,
        component_count,
    }
}

pub fn is_weakly_connected(graph: &AmplifiedGraph) -> bool {
    weakly_connected_components(graph).component_count() <= 1
}
