//! Exact-length reachability over the boolean semiring.
//!
//! The powers `A⁰, A¹, …` of a boolean matrix are eventually periodic. A
//! [`ReachabilityTable`] stores the powers up to the first repeat, so
//! `v Eᵏ w ≠ ∅` can be answered for every `k`.

use std::collections::HashMap;

use thiserror::Error;

use crate::bits::BoolMatrix;
use crate::graph::{AmplifiedGraph, VertexId};

/// Hard cap on the number of distinct powers stored.
pub const MAX_DISTINCT_POWERS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReachError {
    #[error("boolean powers did not repeat within {0} steps")]
    PeriodCapExceeded(usize),
}

#[derive(Clone, Debug)]
pub struct ReachabilityTable {
    powers: Vec<BoolMatrix>,
    preperiod: usize,
    period: usize,
}

impl ReachabilityTable {
    /// Stored powers `A⁰ .. A^{p+q-1}`.
    pub fn powers(&self) -> &[BoolMatrix] {
        &self.powers
    }

    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn vertex_count(&self) -> usize {
        self.powers[0].dim()
    }

    /// `p + q`: every reachability fact is witnessed by some `k` below this.
    pub fn horizon(&self) -> usize {
        self.preperiod + self.period
    }

    fn reduce(&self, k: usize) -> usize {
        if k < self.powers.len() {
            k
        } else {
            self.preperiod + (k - self.preperiod) % self.period
        }
    }

    /// `Aᵏ` for `k ≥ 0`.
    pub fn power(&self, k: u64) -> &BoolMatrix {
        let k = usize::try_from(k).unwrap_or(usize::MAX);
        &self.powers[self.reduce(k)]
    }

    /// `v Eᵏ w ≠ ∅`. Negative lengths are never realized.
    pub fn exact_reach(&self, v: VertexId, w: VertexId, k: i64) -> bool {
        match u64::try_from(k) {
            Ok(k) => self.power(k).get(v.0, w.0),
            Err(_) => false,
        }
    }

    /// `v E* w ≠ ∅`, including the length-zero path when `v = w`.
    pub fn reaches(&self, v: VertexId, w: VertexId) -> bool {
        self.powers.iter().any(|m| m.get(v.0, w.0))
    }
}

/// Builds the table by hashing successive powers until one repeats.
pub fn build_reachability(graph: &AmplifiedGraph) -> Result<ReachabilityTable, ReachError> {
    let n = graph.vertex_count();
    let a = graph.adjacency();
    let mut first_seen: HashMap<BoolMatrix, usize> = HashMap::new();
    let mut powers = Vec::new();
    let mut current = BoolMatrix::identity(n);
    loop {
        if let Some(&i) = first_seen.get(&current) {
            let j = powers.len();
            return Ok(ReachabilityTable {
                powers,
                preperiod: i,
                period: j - i,
            });
        }
        if powers.len() == MAX_DISTINCT_POWERS {
            return Err(ReachError::PeriodCapExceeded(MAX_DISTINCT_POWERS));
        }
        first_seen.insert(current.clone(), powers.len());
        let next = current.mul(a);
        powers.push(current);
        current = next;
    }
}
