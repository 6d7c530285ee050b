use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::system::IndependenceSystem;
use crate::set::CrossingSet;

/// Why an independence system is not a matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatroidWitness {
    /// Two maximal independent sets of different sizes.
    CardinalityMismatch { smaller: CrossingSet, larger: CrossingSet },
    /// No `y ∈ m2` makes `(m1 - {x}) ∪ {y}` maximal independent.
    Exchange { m1: CrossingSet, m2: CrossingSet, x: usize },
}

impl IndependenceSystem {
    /// Basis exchange over the maximal independent sets. Unequal basis sizes
    /// rule out exchange, so that case returns before the pairwise check.
    pub fn matroid_check(&self) -> Result<(), MatroidWitness> {
        let bases = self.maximal_independent_sets();
        if let (Some(&first), Some(&last)) = (bases.first(), bases.last()) {
            if first.len() != last.len() {
                return Err(MatroidWitness::CardinalityMismatch { smaller: first, larger: last });
            }
        }
        exchange_over(&bases)
    }

    pub fn is_matroid(&self) -> bool {
        self.matroid_check().is_ok()
    }
}

/// The literal exchange check over a family of bases, without the
/// cardinality shortcut.
pub fn exchange_over(bases: &[CrossingSet]) -> Result<(), MatroidWitness> {
    let family: HashSet<CrossingSet> = bases.iter().copied().collect();
    for &m1 in bases {
        for &m2 in bases {
            for x in m1.iter() {
                if !m2.iter().any(|y| family.contains(&m1.remove(x).insert(y))) {
                    return Err(MatroidWitness::Exchange { m1, m2, x });
                }
            }
        }
    }
    Ok(())
}
