use std::collections::HashMap;
use std::fmt::Write as _;

use crate::graph::{AmplifiedGraph, VertexId};
use crate::iso::{canonical_form, digraph_isomorphism};
use crate::par::Exec;
use crate::reach::build_reachability;
use crate::rewrite::amplified_transitive_closure;

use super::lattice::{validate_tables, LatticeIsoData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub isomorphic: bool,
    /// Vertex bijection `E⁰ → F⁰` when `isomorphic`.
    pub witness: Option<Vec<VertexId>>,
    /// Canonical forms of the two graphs that were compared.
    pub canonical_e: String,
    pub canonical_f: String,
}

impl Verdict {
    /// Line-oriented `key: value` report. Canonical forms are written on
    /// one line with newlines escaped as `\n`.
    pub fn render(&self, e: &AmplifiedGraph, f: &AmplifiedGraph) -> String {
        let mut out = String::new();
        writeln!(out, "isomorphic: {}", self.isomorphic).unwrap();
        let witness = match &self.witness {
            Some(phi) => phi
                .iter()
                .enumerate()
                .map(|(v, x)| format!("{}->{}", e.name(VertexId(v)), f.name(*x)))
                .collect::<Vec<_>>()
                .join(", "),
            None => "none".to_owned(),
        };
        writeln!(out, "witness: {witness}").unwrap();
        writeln!(out, "canonical_E: {}", escape(&self.canonical_e)).unwrap();
        writeln!(out, "canonical_F: {}", escape(&self.canonical_f)).unwrap();
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

fn compare(e: &AmplifiedGraph, f: &AmplifiedGraph) -> Verdict {
    let witness = digraph_isomorphism(e, f);
    Verdict {
        isomorphic: witness.is_some(),
        witness,
        canonical_e: canonical_form(e),
        canonical_f: canonical_form(f),
    }
}

/// Graded / gauge-equivariant isomorphism of the algebras of `E` and `F`,
/// which holds exactly when `E ≅ F`.
///
/// A found witness `φ` is cross-checked as the lattice isomorphism
/// `H(v, n) ↦ H(φ(v), n)`.
pub fn decide_gauge_iso(e: &AmplifiedGraph, f: &AmplifiedGraph) -> Verdict {
    let verdict = compare(e, f);
    if let Some(phi) = &verdict.witness {
        if let (Ok(te), Ok(tf)) = (build_reachability(e), build_reachability(f)) {
            let rho = LatticeIsoData {
                vertex_map: phi.clone(),
                shift: vec![0; phi.len()],
            };
            assert!(
                validate_tables(&te, &tf, &rho).valid,
                "graph isomorphism failed to induce a lattice isomorphism"
            );
        }
    }
    debug_assert_eq!(
        verdict.isomorphic,
        verdict.canonical_e == verdict.canonical_f
    );
    verdict
}

/// Stable isomorphism of the algebras of `E` and `F`: `tE ≅ tF`. The
/// witness and canonical forms refer to the closures, which share vertex
/// sets with `E` and `F`.
pub fn decide_stable_iso(e: &AmplifiedGraph, f: &AmplifiedGraph) -> Verdict {
    compare(
        &amplified_transitive_closure(e),
        &amplified_transitive_closure(f),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Graded (gauge-equivariant) isomorphism: `E ≅ F`.
    Gauge,
    /// Stable isomorphism: `tE ≅ tF`.
    Stable,
}

/// Partitions `graphs` into classes of the given relation. `result[i]` is
/// the class of `graphs[i]`, with classes numbered by first occurrence.
/// Canonical forms are computed with `exec`.
pub fn iso_classes(graphs: &[AmplifiedGraph], relation: Relation, exec: Exec) -> Vec<usize> {
    let forms = exec.map(graphs, |g| match relation {
        Relation::Gauge => canonical_form(g),
        Relation::Stable => canonical_form(&amplified_transitive_closure(g)),
    });
    let mut seen: HashMap<&str, usize> = HashMap::new();
    forms
        .iter()
        .map(|form| {
            let next = seen.len();
            *seen.entry(form.as_str()).or_insert(next)
        })
        .collect()
}
