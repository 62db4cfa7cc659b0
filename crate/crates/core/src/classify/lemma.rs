//! Recognising translates of `H₀` from order data.
//!
//! For a connected amplified graph, a family `V_H = {H(v, n_v)}` with
//!
//! * (2) the equivalence relation generated by `lt₁(K) ⊆ H` connecting all
//!   of `V_H`, and
//! * (3) `K ⊄ lt_n(K')` for distinct `K, K' ∈ V_H` and every `n ≥ 0`,
//!
//! must have constant levels, i.e. `V_H = lt_n(V₀)`. Condition (1) holds by
//! construction of [`VHSpec`].

use std::collections::HashMap;

use crate::components::{is_weakly_connected, UnionFind};
use crate::graph::{AmplifiedGraph, VertexId};
use crate::reach::{build_reachability, ReachabilityTable};

use super::ClassifyError;

/// The claim `V_H = {H(v, n_v) : v ∈ E⁰}`, one level per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VHSpec {
    levels: Vec<i64>,
}

impl VHSpec {
    pub fn new(levels: Vec<i64>) -> Self {
        VHSpec { levels }
    }

    pub fn constant(graph: &AmplifiedGraph, level: i64) -> Self {
        VHSpec {
            levels: vec![level; graph.vertex_count()],
        }
    }

    /// Builds a total level map from `(vertex name, level)` pairs.
    pub fn from_named(
        graph: &AmplifiedGraph,
        pairs: &[(String, i64)],
    ) -> Result<Self, ClassifyError> {
        let mut by_name: HashMap<&str, i64> = HashMap::new();
        for (name, level) in pairs {
            graph.vertex(name)?;
            if by_name.insert(name, *level).is_some() {
                return Err(ClassifyError::DuplicateLevel(name.clone()));
            }
        }
        let levels = graph
            .vertices()
            .map(|v| {
                by_name
                    .get(graph.name(v))
                    .copied()
                    .ok_or_else(|| ClassifyError::MissingLevel(graph.name(v).to_owned()))
            })
            .collect::<Result<_, _>>()?;
        Ok(VHSpec { levels })
    }

    pub fn level(&self, v: VertexId) -> i64 {
        self.levels[v.0]
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma23Verdict {
    Constant(i64),
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma23Violation {
    /// Condition (2): `separated.1` is not linked to `separated.0`.
    Connectivity { separated: (VertexId, VertexId) },
    /// Condition (3): `H(v, n_v) ⊆ lt_shift(H(w, n_w))` for `pair = (v, w)`.
    ShiftContainment {
        pair: (VertexId, VertexId),
        shift: i64,
    },
}

impl Lemma23Violation {
    pub fn tag(&self) -> &'static str {
        match self {
            Lemma23Violation::Connectivity { .. } => "cond2-connectivity",
            Lemma23Violation::ShiftContainment { .. } => "cond3-shift-containment",
        }
    }
}

/// `lower = L_u = {v : n_v < n_u}` and `upper = G_u = {w : n_w ≥ n_u}` for the
/// first pivot `u` with `L_u` nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    pub pivot: VertexId,
    pub lower: Vec<VertexId>,
    pub upper: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma23Report {
    pub verdict: Lemma23Verdict,
    pub violation: Option<Lemma23Violation>,
    pub partition: Option<LevelPartition>,
}

fn first_shift_containment(
    table: &ReachabilityTable,
    spec: &VHSpec,
    n: usize,
) -> Option<Lemma23Violation> {
    for v in (0..n).map(VertexId) {
        for w in (0..n).map(VertexId) {
            if v == w {
                continue;
            }
            // H(v, n_v) ⊆ H(w, n_w + s)  ⇔  w E^{n_v - n_w - s} v
            let gap = spec.level(v) - spec.level(w);
            for s in 0..=gap {
                if table.exact_reach(w, v, gap - s) {
                    return Some(Lemma23Violation::ShiftContainment {
                        pair: (v, w),
                        shift: s,
                    });
                }
            }
        }
    }
    None
}

fn connectivity_gap(
    table: &ReachabilityTable,
    spec: &VHSpec,
    n: usize,
) -> Option<Lemma23Violation> {
    let mut uf = UnionFind::new(n);
    for v in (0..n).map(VertexId) {
        for w in (0..n).map(VertexId) {
            // lt₁(H(w, n_w)) ⊆ H(v, n_v)  ⇔  v E^{n_w + 1 - n_v} w
            if table.exact_reach(v, w, spec.level(w) + 1 - spec.level(v)) {
                uf.union(v.0, w.0);
            }
        }
    }
    let root = uf.find(0);
    (1..n)
        .find(|&x| uf.find(x) != root)
        .map(|x| Lemma23Violation::Connectivity {
            separated: (VertexId(0), VertexId(x)),
        })
}

fn level_partition(spec: &VHSpec) -> Option<LevelPartition> {
    let n = spec.levels.len();
    (0..n).find_map(|u| {
        let nu = spec.levels[u];
        let lower: Vec<VertexId> = (0..n)
            .filter(|&v| spec.levels[v] < nu)
            .map(VertexId)
            .collect();
        if lower.is_empty() {
            return None;
        }
        let upper = (0..n)
            .filter(|&w| spec.levels[w] >= nu)
            .map(VertexId)
            .collect();
        Some(LevelPartition {
            pivot: VertexId(u),
            lower,
            upper,
        })
    })
}

/// Checks conditions (3) then (2) for the claimed levels on a connected
/// graph. Only shifts `0 ≤ s ≤ n_v - n_w` can realise a containment in
/// condition (3), since longer shifts need a path of negative length.
///
/// If both conditions hold the levels must be constant; anything else is
/// reported as [`ClassifyError::InternalInconsistency`].
pub fn check_lemma23(e: &AmplifiedGraph, spec: &VHSpec) -> Result<Lemma23Report, ClassifyError> {
    let n = e.vertex_count();
    if spec.levels.len() != n {
        return Err(ClassifyError::LevelCount {
            expected: n,
            got: spec.levels.len(),
        });
    }
    if n == 0 || !is_weakly_connected(e) {
        return Err(ClassifyError::Disconnected);
    }
    let table = build_reachability(e)?;

    let violation =
        first_shift_containment(&table, spec, n).or_else(|| connectivity_gap(&table, spec, n));
    if let Some(violation) = violation {
        return Ok(Lemma23Report {
            verdict: Lemma23Verdict::Violated,
            violation: Some(violation),
            partition: level_partition(spec),
        });
    }

    let level = spec.levels[0];
    if spec.levels.iter().any(|&l| l != level) {
        return Err(ClassifyError::InternalInconsistency(format!(
            "conditions (2) and (3) hold for non-constant levels {:?}",
            spec.levels
        )));
    }
    Ok(Lemma23Report {
        verdict: Lemma23Verdict::Constant(level),
        violation: None,
        partition: None,
    })
}
