//! Classification engines.
//!
//! An amplified graph `E` is recovered from the ordered lattice of hereditary
//! subsets of `E ×₁ ℤ` together with its translation action and the base
//! point `H₀`. Graded (gauge-equivariant) isomorphism of the algebras is
//! therefore graph isomorphism, and stable isomorphism is isomorphism of
//! amplified transitive closures.

mod lattice;
mod lemma;
mod reconstruct;
mod verdict;

use thiserror::Error;

use crate::graph::GraphError;
use crate::reach::ReachError;

pub use lattice::{
    normalize_lattice_iso, search_bounded_iso, search_bounded_iso_with, validate_lattice_iso,
    validate_lattice_iso_report, LatticeCheck, LatticeIsoData, NormalizedIso, MAX_SEARCH_BOUND,
    MAX_SEARCH_VERTICES,
};
pub use lemma::{
    check_lemma23, Lemma23Report, Lemma23Verdict, Lemma23Violation, LevelPartition, VHSpec,
};
pub use reconstruct::{reconstruct, Reconstruction};
pub use verdict::{decide_gauge_iso, decide_stable_iso, iso_classes, Relation, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph is not connected (the level check needs a nonempty connected graph)")]
    Disconnected,
    #[error("level map covers {got} vertices, graph has {expected}")]
    LevelCount { expected: usize, got: usize },
    #[error("no level given for vertex `{0}`")]
    MissingLevel(String),
    #[error("level given twice for vertex `{0}`")]
    DuplicateLevel(String),
    #[error("vertex map is not a bijection onto {0} vertices")]
    NotBijective(usize),
    #[error("lattice data does not define an isomorphism of the hereditary-set lattices")]
    InvalidLatticeIso,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("oracle search is capped at {max_vertices} vertices and bound {max_bound}")]
    ScaleCap { max_vertices: usize, max_bound: u32 },
    #[error(transparent)]
    Reach(#[from] ReachError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
