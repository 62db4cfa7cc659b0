//! Isomorphisms of `(𝓗(E ×₁ ℤ), ⊆, lt)` presented on principal generators.
//!
//! Every hereditary set is the union of the principal sets it contains, and
//! principal sets are order-theoretically recognisable, so a lattice
//! isomorphism commuting with `lt` is determined by where it sends each
//! `H(v, 0)`: `H(v, n) ↦ H(φ(v), n + c(v))`.

use itertools::Itertools;

use crate::components::weakly_connected_components;
use crate::graph::{AmplifiedGraph, VertexId};
use crate::par::Exec;
use crate::reach::{build_reachability, ReachabilityTable};
use crate::skew::PrincipalHereditary;

use super::lemma::{check_lemma23, Lemma23Verdict, VHSpec};
use super::ClassifyError;

/// Largest graph accepted by [`search_bounded_iso`].
pub const MAX_SEARCH_VERTICES: usize = 6;
/// Largest shift bound accepted by [`search_bounded_iso`].
pub const MAX_SEARCH_BOUND: u32 = 3;

/// Candidate lattice map `H(v, n) ↦ H(vertex_map[v], n + shift[v])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeIsoData {
    pub vertex_map: Vec<VertexId>,
    pub shift: Vec<i64>,
}

impl LatticeIsoData {
    pub fn identity(n: usize) -> Self {
        LatticeIsoData {
            vertex_map: (0..n).map(VertexId).collect(),
            shift: vec![0; n],
        }
    }

    pub fn apply(&self, h: PrincipalHereditary) -> PrincipalHereditary {
        PrincipalHereditary::new(
            self.vertex_map[h.vertex.0],
            h.level + self.shift[h.vertex.0],
        )
    }

    fn check_bijective(&self, n_e: usize, n_f: usize) -> Result<(), ClassifyError> {
        let n = self.vertex_map.len();
        if n != n_e || n_f != n_e || self.shift.len() != n {
            return Err(ClassifyError::NotBijective(n_f));
        }
        let mut hit = vec![false; n];
        for &x in &self.vertex_map {
            if x.0 >= n || std::mem::replace(&mut hit[x.0], true) {
                return Err(ClassifyError::NotBijective(n_f));
            }
        }
        Ok(())
    }
}

/// Outcome of [`validate_lattice_iso_report`], including the range of path
/// lengths that was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCheck {
    pub valid: bool,
    /// Inclusive range of `k` checked.
    pub range: (i64, i64),
    /// First `(v, w, k)` where `v Eᵏ w ≠ ∅` and its image disagree.
    pub counterexample: Option<(VertexId, VertexId, i64)>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Range of `k` beyond which both sides of every comparison are periodic
/// with joint period `lcm(q_E, q_F)`.
fn check_range(te: &ReachabilityTable, tf: &ReachabilityTable, shift: &[i64]) -> (i64, i64) {
    let spread = match (shift.iter().min(), shift.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    };
    let k0 = te.horizon().max(tf.horizon()) as i64 + spread;
    let lcm = te.period() / gcd(te.period(), tf.period()) * tf.period();
    (-k0, k0 + lcm as i64)
}

pub(super) fn validate_tables(
    te: &ReachabilityTable,
    tf: &ReachabilityTable,
    rho: &LatticeIsoData,
) -> LatticeCheck {
    let n = te.vertex_count();
    let (lo, hi) = check_range(te, tf, &rho.shift);
    let mut counterexample = None;
    'scan: for v in 0..n {
        for w in 0..n {
            let (ve, we) = (VertexId(v), VertexId(w));
            let (vf, wf) = (rho.vertex_map[v], rho.vertex_map[w]);
            let d = rho.shift[w] - rho.shift[v];
            for k in lo..=hi {
                if te.exact_reach(ve, we, k) != tf.exact_reach(vf, wf, k + d) {
                    counterexample = Some((ve, we, k));
                    break 'scan;
                }
            }
        }
    }
    LatticeCheck {
        valid: counterexample.is_none(),
        range: (lo, hi),
        counterexample,
    }
}

/// Checks that `ρ` preserves and reflects containment of principal sets:
/// `v Eᵏ w ≠ ∅ ⇔ φ(v) F^{k + c(w) - c(v)} φ(w) ≠ ∅` for every `k`.
///
/// Both sides are eventually periodic, so a finite range of `k` decides the
/// quantifier; the range is reported.
pub fn validate_lattice_iso_report(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    rho: &LatticeIsoData,
) -> Result<LatticeCheck, ClassifyError> {
    rho.check_bijective(e.vertex_count(), f.vertex_count())?;
    let te = build_reachability(e)?;
    let tf = build_reachability(f)?;
    Ok(validate_tables(&te, &tf, rho))
}

pub fn validate_lattice_iso(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    rho: &LatticeIsoData,
) -> Result<bool, ClassifyError> {
    validate_lattice_iso_report(e, f, rho).map(|c| c.valid)
}

/// A normalized lattice isomorphism and the per-component translations that
/// were removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedIso {
    /// `ρ̄`, with `shift ≡ 0`, so it carries `H₀ᴱ` to `H₀ᶠ`.
    pub iso: LatticeIsoData,
    /// `component_shifts[C]` is the constant shift `n_C` of `ρ` on component
    /// `C` of `E` (components numbered as in
    /// [`weakly_connected_components`]).
    pub component_shifts: Vec<i64>,
}

/// Composes `ρ` with `lt_{-n_C}` on each weakly connected component `C` of
/// `E`.
///
/// Constancy of the shift on `C` is established, not assumed: the image
/// family `{H(φ(v), c(v)) : v ∈ C}` is handed to [`check_lemma23`] on the
/// matching component of `F`, which must answer `constant(n_C)`.
pub fn normalize_lattice_iso(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    rho: &LatticeIsoData,
) -> Result<NormalizedIso, ClassifyError> {
    if !validate_lattice_iso(e, f, rho)? {
        return Err(ClassifyError::InvalidLatticeIso);
    }
    let comps_e = weakly_connected_components(e);
    let comps_f = weakly_connected_components(f);

    let mut shift = rho.shift.clone();
    let mut component_shifts = Vec::with_capacity(comps_e.component_count());
    for members in comps_e.members() {
        let image: Vec<VertexId> = members.iter().map(|v| rho.vertex_map[v.0]).collect();
        let target = comps_f.component_of(image[0]);
        let whole = comps_f.labels().iter().filter(|&&c| c == target).count();
        if image.iter().any(|&x| comps_f.component_of(x) != target) || whole != image.len() {
            return Err(ClassifyError::InternalInconsistency(format!(
                "component {:?} of E does not map onto a component of F",
                members
            )));
        }
        let (f_c, _) = f.induced_subgraph(&image);
        let levels = members.iter().map(|v| rho.shift[v.0]).collect();
        let report = check_lemma23(&f_c, &VHSpec::new(levels))?;
        let Lemma23Verdict::Constant(n_c) = report.verdict else {
            return Err(ClassifyError::InternalInconsistency(format!(
                "shift is not constant on component {:?}: {:?}",
                members, report.violation
            )));
        };
        for v in &members {
            shift[v.0] -= n_c;
        }
        component_shifts.push(n_c);
    }

    let iso = LatticeIsoData {
        vertex_map: rho.vertex_map.clone(),
        shift,
    };
    if !validate_lattice_iso(e, f, &iso)? {
        return Err(ClassifyError::InternalInconsistency(
            "normalized map no longer validates".to_owned(),
        ));
    }
    Ok(NormalizedIso {
        iso,
        component_shifts,
    })
}

/// Exhaustive oracle: the first validated `(φ, c)` with `c` constant on each
/// weakly connected component of `E` and `|c| ≤ bound`.
///
/// `φ` is enumerated in lexicographic order of its image sequence, and for
/// each `φ` the component shifts in lexicographic order over
/// `[-bound, bound]^components`.
pub fn search_bounded_iso(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    bound: u32,
) -> Result<Option<LatticeIsoData>, ClassifyError> {
    search_bounded_iso_with(e, f, bound, Exec::default())
}

pub fn search_bounded_iso_with(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    bound: u32,
    exec: Exec,
) -> Result<Option<LatticeIsoData>, ClassifyError> {
    let n = e.vertex_count();
    if n > MAX_SEARCH_VERTICES || f.vertex_count() > MAX_SEARCH_VERTICES || bound > MAX_SEARCH_BOUND
    {
        return Err(ClassifyError::ScaleCap {
            max_vertices: MAX_SEARCH_VERTICES,
            max_bound: MAX_SEARCH_BOUND,
        });
    }
    if f.vertex_count() != n {
        return Ok(None);
    }
    let te = build_reachability(e)?;
    let tf = build_reachability(f)?;
    let comps = weakly_connected_components(e);
    let labels = comps.labels();
    let m = comps.component_count();
    let b = i64::from(bound);

    let maps: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let hit = exec.find_map_first(&maps, |phi| {
        // Necessary for every component-constant shift: inside a component
        // the shift difference is zero, so adjacency must already match;
        // across components E has no paths, and the checked range covers
        // every length F could use.
        let local_ok = (0..n).all(|v| {
            (0..n).all(|w| {
                let (fv, fw) = (VertexId(phi[v]), VertexId(phi[w]));
                if labels[v] == labels[w] {
                    e.has_edge(VertexId(v), VertexId(w)) == f.has_edge(fv, fw)
                } else {
                    !tf.reaches(fv, fw)
                }
            })
        });
        if !local_ok {
            return None;
        }
        let mut per_component = vec![-b; m];
        loop {
            let rho = LatticeIsoData {
                vertex_map: phi.iter().copied().map(VertexId).collect(),
                shift: labels.iter().map(|&c| per_component[c]).collect(),
            };
            if validate_tables(&te, &tf, &rho).valid {
                return Some(rho);
            }
            // odometer, last component fastest
            let mut i = m;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if per_component[i] < b {
                    per_component[i] += 1;
                    break;
                }
                per_component[i] = -b;
            }
        }
    });
    Ok(hit)
}
