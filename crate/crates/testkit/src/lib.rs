//! Brute-force oracles for the amplify test suites.
//!
//! Everything here reads graphs only through `has_edge` and vertex counts,
//! and recomputes its answers by direct enumeration. None of it goes through
//! matrix powers, colour refinement, or the symbolic skew-product layer.

#![allow(clippy::needless_range_loop)]

use amplify_core::{AmplifiedGraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn edge(g: &AmplifiedGraph, v: usize, w: usize) -> bool {
    g.has_edge(VertexId(v), VertexId(w))
}

pub fn preserves_adjacency(g: &AmplifiedGraph, h: &AmplifiedGraph, phi: &[usize]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|v| (0..n).all(|w| edge(g, v, w) == edge(h, phi[v], phi[w])))
}

/// First adjacency-preserving bijection among all `n!` candidates.
pub fn brute_force_iso(g: &AmplifiedGraph, h: &AmplifiedGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() {
        return None;
    }
    permutations(g.vertex_count())
        .into_iter()
        .find(|phi| preserves_adjacency(g, h, phi))
}

/// Whether a walk of exactly `k` edges runs from `v` to `w`, by expanding
/// the set of walk endpoints one edge at a time.
pub fn walk_exists(g: &AmplifiedGraph, v: usize, w: usize, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    let n = g.vertex_count();
    let mut frontier = vec![false; n];
    frontier[v] = true;
    for _ in 0..k {
        let mut next = vec![false; n];
        for x in 0..n {
            if frontier[x] {
                for y in 0..n {
                    if edge(g, x, y) {
                        next[y] = true;
                    }
                }
            }
        }
        frontier = next;
    }
    frontier[w]
}

/// Explicitly enumerates every vertex sequence `v = x₀, x₁, …, x_k = w`
/// along edges and counts them. Exponential; for tiny inputs only.
pub fn count_walks(g: &AmplifiedGraph, v: usize, w: usize, k: usize) -> u64 {
    if k == 0 {
        return u64::from(v == w);
    }
    (0..g.vertex_count())
        .filter(|&x| edge(g, v, x))
        .map(|x| count_walks(g, x, w, k - 1))
        .sum()
}

/// Vertices reachable from `v` by a walk of length ≥ 0.
pub fn bfs_reachable(g: &AmplifiedGraph, v: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([v]);
    seen[v] = true;
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            if edge(g, x, y) && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Vertices reachable from `v` by a walk of length ≥ 1.
pub fn bfs_reachable_nonempty(g: &AmplifiedGraph, v: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut out = vec![false; n];
    for x in (0..n).filter(|&x| edge(g, v, x)) {
        for (y, r) in bfs_reachable(g, x).into_iter().enumerate() {
            out[y] |= r;
        }
    }
    out
}

/// Component labels of the symmetrized edge relation via BFS, numbered by
/// smallest member.
pub fn bfs_components(g: &AmplifiedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if (edge(g, x, y) || edge(g, y, x)) && label[y] == usize::MAX {
                    label[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn is_acyclic(g: &AmplifiedGraph) -> bool {
    (0..g.vertex_count()).all(|v| !bfs_reachable_nonempty(g, v)[v])
}

/// Members `(w, level)` of the skew-product band `[lo, hi]` reachable from
/// `(v, start)`, by BFS over the explicitly built band.
pub fn band_reachable(
    g: &AmplifiedGraph,
    lo: i64,
    hi: i64,
    v: usize,
    start: i64,
) -> Vec<(usize, i64)> {
    let n = g.vertex_count();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    if (lo..=hi).contains(&start) {
        seen.insert((start, v));
        queue.push_back((v, start));
    }
    while let Some((x, k)) = queue.pop_front() {
        if k == hi {
            continue;
        }
        for y in 0..n {
            if edge(g, x, y) && seen.insert((k + 1, y)) {
                queue.push_back((y, k + 1));
            }
        }
    }
    seen.into_iter().map(|(k, x)| (x, k)).collect()
}

pub fn graph_from_edges(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> AmplifiedGraph {
    let mut g = AmplifiedGraph::new((0..n).map(|i| format!("v{i}"))).unwrap();
    for (v, w) in edges {
        g.add_edge(VertexId(v), VertexId(w));
    }
    g
}

/// Every amplified graph on `n ≤ 4` vertices, by adjacency code.
pub fn all_graphs(n: usize) -> impl Iterator<Item = AmplifiedGraph> {
    assert!(n <= 4, "2^(n²) graphs is too many beyond four vertices");
    (0u64..1 << (n * n)).map(move |code| AmplifiedGraph::from_code(n, code))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> AmplifiedGraph {
    let mut edges = Vec::new();
    for v in 0..n {
        for w in 0..n {
            if rng.gen_bool(density) {
                edges.push((v, w));
            }
        }
    }
    graph_from_edges(n, edges)
}

/// Random graph whose edges only go from lower to higher index, so it is
/// acyclic, then shuffled.
pub fn random_acyclic_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> AmplifiedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((order[i], order[j]));
            }
        }
    }
    graph_from_edges(n, edges)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `g` with vertex `v` renamed to position `perm[v]`; names are rewritten
/// to `v0 ..` in the new order.
pub fn relabel(g: &AmplifiedGraph, perm: &[usize]) -> AmplifiedGraph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for v in 0..n {
        for w in 0..n {
            if edge(g, v, w) {
                edges.push((perm[v], perm[w]));
            }
        }
    }
    graph_from_edges(n, edges)
}

/// Row-major adjacency code, bit `v * n + w` for the edge `v → w`.
pub fn adjacency_code(g: &AmplifiedGraph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 8);
    let mut code = 0;
    for v in 0..n {
        for w in 0..n {
            if edge(g, v, w) {
                code |= 1 << (v * n + w);
            }
        }
    }
    code
}

/// Smallest adjacency code over all relabellings: equal exactly for
/// isomorphic graphs on the same number of vertices.
pub fn brute_canonical_code(g: &AmplifiedGraph) -> u64 {
    permutations(g.vertex_count())
        .iter()
        .map(|p| adjacency_code(&relabel(g, p)))
        .min()
        .unwrap()
}

/// Every adjacency-preserving permutation of `g`.
pub fn automorphisms(g: &AmplifiedGraph) -> Vec<Vec<usize>> {
    permutations(g.vertex_count())
        .into_iter()
        .filter(|p| preserves_adjacency(g, g, p))
        .collect()
}

/// Every acyclic graph on `n ≤ 5` labelled vertices, each once, in
/// increasing adjacency code. Built from each linear order's forward edges.
pub fn all_acyclic_graphs(n: usize) -> Vec<AmplifiedGraph> {
    assert!(n <= 5);
    let pairs = n * (n - 1) / 2;
    let mut codes = std::collections::BTreeSet::new();
    for order in permutations(n) {
        for mask in 0u64..1 << pairs {
            let mut code = 0u64;
            let mut bit = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> bit & 1 == 1 {
                        code |= 1 << (order[i] * n + order[j]);
                    }
                    bit += 1;
                }
            }
            codes.insert(code);
        }
    }
    codes
        .into_iter()
        .map(|c| AmplifiedGraph::from_code(n, c))
        .collect()
}

/// `layers[k][w]`: a walk of exactly `k` edges runs from `v` to `w`, for
/// `k ≤ max_len`. Same expansion as [`walk_exists`], kept for every `k`.
pub fn walk_layers(g: &AmplifiedGraph, v: usize, max_len: usize) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut layers = Vec::with_capacity(max_len + 1);
    let mut frontier = vec![false; n];
    frontier[v] = true;
    for _ in 0..max_len {
        let mut next = vec![false; n];
        for x in (0..n).filter(|&x| frontier[x]) {
            for y in 0..n {
                next[y] |= edge(g, x, y);
            }
        }
        layers.push(std::mem::replace(&mut frontier, next));
    }
    layers.push(frontier);
    layers
}
