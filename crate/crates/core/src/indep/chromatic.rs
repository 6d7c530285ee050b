//! Exact `I`-chromatic number: the fewest independent sets partitioning `E`.

use serde::{Deserialize, Serialize};

use super::system::IndependenceSystem;
use crate::error::{Error, Result};
use crate::set::CrossingSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub number: usize,
    pub partition: Vec<CrossingSet>,
}

impl IndependenceSystem {
    /// Smallest `k` such that the crossings split into `k` nonempty
    /// independent sets, with a witness partition. Tries `k = 1, 2, ...` so
    /// the first success also proves `k - 1` infeasible.
    pub fn chromatic_number(&self) -> Result<Coloring> {
        let n = self.ground_size();
        if n == 0 {
            return Err(Error::ChromaticUndefined("empty ground set"));
        }
        if (0..n).any(|i| !self.is_independent(CrossingSet::singleton(i))) {
            return Err(Error::ChromaticUndefined("some crossing is not independent on its own"));
        }
        for k in 1..=n {
            if let Some(partition) = self.partition_into(k) {
                return Ok(Coloring { number: k, partition });
            }
        }
        unreachable!("singletons always partition E")
    }

    /// A partition of `E` into at most `k` independent parts, if one exists.
    /// Parts are opened in order of their smallest element, which removes
    /// the `k!` relabelings of each partition from the search.
    pub fn partition_into(&self, k: usize) -> Option<Vec<CrossingSet>> {
        let mut parts = Vec::with_capacity(k);
        if self.assign(0, k, &mut parts) {
            Some(parts)
        } else {
            None
        }
    }

    fn assign(&self, elem: usize, k: usize, parts: &mut Vec<CrossingSet>) -> bool {
        if elem == self.ground_size() {
            return true;
        }
        for p in 0..parts.len() {
            let grown = parts[p].insert(elem);
            if self.is_independent(grown) {
                let old = parts[p];
                parts[p] = grown;
                if self.assign(elem + 1, k, parts) {
                    return true;
                }
                parts[p] = old;
            }
        }
        // Bound: a new part is only worth opening while one is still free.
        if parts.len() < k {
            parts.push(CrossingSet::singleton(elem));
            if self.assign(elem + 1, k, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }
}

/// Checks that `partition` is a partition of `0..n` into nonempty
/// independent sets.
pub fn is_valid_partition(sys: &IndependenceSystem, partition: &[CrossingSet]) -> bool {
    let mut seen = CrossingSet::EMPTY;
    for &p in partition {
        if p.is_empty() || !sys.is_u_independent(p) || !p.intersection(seen).is_empty() {
            return false;
        }
        seen = seen.union(p);
    }
    seen == sys.ground_set()
}
