//! Digraph isomorphism and canonical forms.
//!
//! For amplified graphs an isomorphism is determined by its vertex part: any
//! adjacency-preserving vertex bijection lifts to the edges because each
//! nonempty bundle is countably infinite on both sides.
//!
//! Both routines start from stable colour refinement (iterated in/out-degree
//! refinement). Colours are ranks of sorted signatures, so they are
//! isomorphism-invariant and comparable across graphs refined together.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::{AmplifiedGraph, VertexId};

type Coloring = Vec<u32>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    color: u32,
    looped: bool,
    out: Vec<u32>,
    inn: Vec<u32>,
}

fn signature(g: &AmplifiedGraph, colors: &[u32], v: VertexId) -> Signature {
    let mut out: Vec<u32> = g.successors(v).map(|w| colors[w.0]).collect();
    let mut inn: Vec<u32> = g
        .vertices()
        .filter(|&u| g.has_edge(u, v))
        .map(|u| colors[u.0])
        .collect();
    out.sort_unstable();
    inn.sort_unstable();
    Signature {
        color: colors[v.0],
        looped: g.has_edge(v, v),
        out,
        inn,
    }
}

fn class_count(colorings: &[Coloring]) -> usize {
    let mut all: Vec<u32> = colorings.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Refines the colourings of several graphs jointly until the number of
/// colour classes stops growing. The old colour leads each signature, so the
/// relative order of existing classes is preserved.
fn refine(graphs: &[&AmplifiedGraph], mut colorings: Vec<Coloring>) -> Vec<Coloring> {
    let mut classes = class_count(&colorings);
    loop {
        let sigs: Vec<Vec<Signature>> = graphs
            .iter()
            .zip(&colorings)
            .map(|(g, c)| g.vertices().map(|v| signature(g, c, v)).collect())
            .collect();
        let mut ranks: BTreeMap<&Signature, u32> = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i as u32;
        }
        let next: Vec<Coloring> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| ranks[s]).collect())
            .collect();
        let next_classes = ranks.len();
        colorings = next;
        if next_classes == classes {
            return colorings;
        }
        classes = next_classes;
    }
}

fn stable_coloring(graphs: &[&AmplifiedGraph]) -> Vec<Coloring> {
    let initial = graphs.iter().map(|g| vec![0; g.vertex_count()]).collect();
    refine(graphs, initial)
}

/// Checks that `phi` is a bijection `G⁰ → H⁰` with
/// `adj_G[v][w] = adj_H[φv][φw]` for all `v, w`.
pub fn is_isomorphism(g: &AmplifiedGraph, h: &AmplifiedGraph, phi: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || phi.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in phi {
        if x.0 >= n || std::mem::replace(&mut hit[x.0], true) {
            return false;
        }
    }
    g.vertices().all(|v| {
        g.vertices()
            .all(|w| g.has_edge(v, w) == h.has_edge(phi[v.0], phi[w.0]))
    })
}

/// Finds an adjacency-preserving bijection `G⁰ → H⁰` if one exists.
///
/// Backtracking over `G`'s vertices (smallest colour class first), trying
/// candidates in `H` in increasing index order. The result is deterministic.
pub fn digraph_isomorphism(g: &AmplifiedGraph, h: &AmplifiedGraph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    if h.vertex_count() != n || g.edge_count() != h.edge_count() {
        return None;
    }
    let colors = stable_coloring(&[g, h]);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    let class_size = |c: u32| hist_g.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size(cg[v]), cg[v], v));

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, cg, ch, &order, 0, &mut phi, &mut used) {
        Some(phi.into_iter().map(VertexId).collect())
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &AmplifiedGraph,
    h: &AmplifiedGraph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let gv = VertexId(v);
    for x in 0..h.vertex_count() {
        if used[x] || ch[x] != cg[v] {
            continue;
        }
        let hx = VertexId(x);
        if g.has_edge(gv, gv) != h.has_edge(hx, hx) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let (gu, hu) = (VertexId(u), VertexId(phi[u]));
            g.has_edge(gv, gu) == h.has_edge(hx, hu) && g.has_edge(gu, gv) == h.has_edge(hu, hx)
        });
        if !consistent {
            continue;
        }
        phi[v] = x;
        used[x] = true;
        if extend(g, h, cg, ch, order, depth + 1, phi, used) {
            return true;
        }
        used[x] = false;
        phi[v] = usize::MAX;
    }
    false
}

/// Vertices `u`, `u'` are twins when the transposition `(u u')` is an
/// automorphism. Twins are interchangeable during the canonical search.
fn twin_classes(g: &AmplifiedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class: Vec<usize> = (0..n).collect();
    for a in 0..n {
        if class[a] != a {
            continue;
        }
        for (b, c) in class.iter_mut().enumerate().skip(a + 1) {
            if *c == b && is_twin(g, VertexId(a), VertexId(b)) {
                *c = a;
            }
        }
    }
    class
}

fn is_twin(g: &AmplifiedGraph, a: VertexId, b: VertexId) -> bool {
    g.has_edge(a, a) == g.has_edge(b, b)
        && g.has_edge(a, b) == g.has_edge(b, a)
        && g.vertices()
            .filter(|&x| x != a && x != b)
            .all(|x| g.has_edge(a, x) == g.has_edge(b, x) && g.has_edge(x, a) == g.has_edge(x, b))
}

fn individualize(colors: &[u32], target: usize) -> Coloring {
    let keyed: Vec<u32> = colors
        .iter()
        .enumerate()
        .map(|(v, &c)| 2 * c + u32::from(v != target))
        .collect();
    let mut distinct = keyed.clone();
    distinct.sort_unstable();
    distinct.dedup();
    keyed
        .iter()
        .map(|k| distinct.binary_search(k).unwrap() as u32)
        .collect()
}

struct CanonSearch<'a> {
    graph: &'a AmplifiedGraph,
    twins: Vec<usize>,
    best: Option<(Vec<bool>, Coloring)>,
}

impl CanonSearch<'_> {
    fn leaf_key(&self, positions: &[u32]) -> Vec<bool> {
        let n = self.graph.vertex_count();
        let mut at = vec![0usize; n];
        for (v, &p) in positions.iter().enumerate() {
            at[p as usize] = v;
        }
        let mut key = Vec::with_capacity(n * n);
        for &v in &at {
            for &w in &at {
                key.push(self.graph.has_edge(VertexId(v), VertexId(w)));
            }
        }
        key
    }

    fn search(&mut self, colors: Coloring) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(cell) = sizes.iter().position(|&s| s > 1) else {
            let key = self.leaf_key(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, colors));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if colors[v] as usize != cell || tried.contains(&self.twins[v]) {
                continue;
            }
            tried.push(self.twins[v]);
            let split = individualize(&colors, v);
            let refined = refine(&[self.graph], vec![split]).pop().unwrap();
            self.search(refined);
        }
    }
}

/// Canonical relabelling: `result[v]` is the canonical position of `v`.
pub fn canonical_labeling(g: &AmplifiedGraph) -> Vec<VertexId> {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    let start = stable_coloring(&[g]).pop().unwrap();
    let mut search = CanonSearch {
        graph: g,
        twins: twin_classes(g),
        best: None,
    };
    search.search(start);
    let (_, positions) = search.best.expect("search reaches at least one leaf");
    positions
        .into_iter()
        .map(|p| VertexId(p as usize))
        .collect()
}

/// Text-format serialization of `g` relabelled canonically with vertices
/// `v0 .. v(n-1)`. Two graphs have equal canonical forms iff they are
/// isomorphic.
pub fn canonical_form(g: &AmplifiedGraph) -> String {
    let perm = canonical_labeling(g);
    let relabelled = g.permuted(&perm);
    let mut out = String::new();
    for i in 0..g.vertex_count() {
        writeln!(out, "vertex v{i}").unwrap();
    }
    for (v, w) in relabelled.edges() {
        writeln!(out, "edge v{} v{}", v.0, w.0).unwrap();
    }
    out
}
