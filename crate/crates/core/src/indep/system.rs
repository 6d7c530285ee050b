use std::collections::BTreeMap;

use bitvec::prelude::*;

use super::map::{proper_subset_closure, UnknottingMap};
use crate::error::{Error, Result};
use crate::set::{CrossingSet, MAX_GROUND};

/// The U-independence system `(E, I)` of a diagram.
///
/// `I` is determined by the antichain of minimal unknotting sets: a crossing
/// set `W` is U-independent iff no minimal unknotting set is a *proper*
/// subset of `W`. A minimal unknotting set is therefore itself independent,
/// and maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceSystem {
    n: usize,
    minimal: Vec<CrossingSet>,
    independent: BitVec,
}

pub fn build_system(m: &UnknottingMap) -> IndependenceSystem {
    IndependenceSystem::from_map(m)
}

/// Counts sets by cardinality.
pub fn size_profile<I: IntoIterator<Item = CrossingSet>>(sets: I) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for s in sets {
        *out.entry(s.len()).or_insert(0) += 1;
    }
    out
}

impl IndependenceSystem {
    pub fn from_map(m: &UnknottingMap) -> Self {
        Self::from_antichain(m.ground_size(), m.minimal_unknotting_sets())
    }

    /// Builds a system from an explicit antichain over `0..n`.
    pub fn from_minimal_sets(n: usize, sets: Vec<CrossingSet>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::CapExceeded { n, cap: MAX_GROUND });
        }
        if let Some(s) = sets.iter().find(|s| s.span() > n) {
            return Err(Error::IndexOutOfRange { index: s.span() - 1, n });
        }
        let mut sets = sets;
        sets.sort();
        sets.dedup();
        for a in &sets {
            if let Some(b) = sets.iter().find(|b| a.is_proper_subset(**b)) {
                return Err(Error::NotAntichain(a.to_string(), b.to_string()));
            }
        }
        Ok(Self::from_antichain(n, sets))
    }

    fn from_antichain(n: usize, minimal: Vec<CrossingSet>) -> Self {
        let mut marked = bitvec![0; 1 << n];
        for m in &minimal {
            marked.set(m.index(), true);
        }
        let mut independent = proper_subset_closure(n, &marked);
        independent = !independent;
        Self { n, minimal, independent }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> CrossingSet {
        CrossingSet::full(self.n)
    }

    /// The minimal unknotting sets, sorted by size then lexicographically.
    pub fn minimal_unknotting_sets(&self) -> &[CrossingSet] {
        &self.minimal
    }

    /// Membership by the antichain rule: no minimal unknotting set is a
    /// proper subset of `w`.
    pub fn is_u_independent(&self, w: CrossingSet) -> bool {
        !self.minimal.iter().any(|m| m.is_proper_subset(w))
    }

    /// Table lookup; agrees with [`Self::is_u_independent`].
    pub fn is_independent(&self, w: CrossingSet) -> bool {
        self.independent[w.index()]
    }

    /// Every member of `I`, the empty set included, in canonical order.
    pub fn independent_sets(&self) -> Vec<CrossingSet> {
        let mut out: Vec<CrossingSet> = self
            .independent
            .iter_ones()
            .map(|s| CrossingSet::from_mask(s as u32))
            .collect();
        out.sort();
        out
    }

    /// Number of nonempty independent sets of each size.
    pub fn independent_profile(&self) -> BTreeMap<usize, usize> {
        size_profile(self.independent_sets().into_iter().filter(|s| !s.is_empty()))
    }

    pub fn independent_count(&self) -> usize {
        self.independent.count_ones() - 1
    }

    /// Independent sets not contained in any other independent set.
    pub fn maximal_independent_sets(&self) -> Vec<CrossingSet> {
        let full = self.ground_set();
        let mut out: Vec<CrossingSet> = self
            .independent
            .iter_ones()
            .map(|s| CrossingSet::from_mask(s as u32))
            .filter(|&s| full.difference(s).iter().all(|x| !self.is_independent(s.insert(x))))
            .collect();
        out.sort();
        out
    }

    /// Minimal dependent sets. `I` is exactly the family of sets containing
    /// no circuit.
    pub fn circuits(&self) -> Vec<CrossingSet> {
        let mut out: Vec<CrossingSet> = self
            .independent
            .iter_zeros()
            .map(|s| CrossingSet::from_mask(s as u32))
            .filter(|&s| s.iter().all(|x| self.is_independent(s.remove(x))))
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> CrossingSet {
        v.iter().copied().collect()
    }

    #[test]
    fn proper_subset_reading() {
        // Minimal sets {0}, {1,2} on three crossings.
        let sys = IndependenceSystem::from_minimal_sets(3, vec![set(&[0]), set(&[1, 2])]).unwrap();
        assert!(sys.is_u_independent(CrossingSet::EMPTY));
        assert!(sys.is_u_independent(set(&[0])));
        assert!(sys.is_u_independent(set(&[1, 2])));
        assert!(!sys.is_u_independent(set(&[0, 1])));
        assert!(!sys.is_u_independent(set(&[0, 1, 2])));
        assert_eq!(sys.maximal_independent_sets(), vec![set(&[0]), set(&[1, 2])]);
        assert_eq!(sys.circuits(), vec![set(&[0, 1]), set(&[0, 2])]);
        assert_eq!(sys.independent_profile(), BTreeMap::from([(1, 3), (2, 1)]));
    }

    #[test]
    fn unknot_system() {
        let sys = IndependenceSystem::from_minimal_sets(2, vec![CrossingSet::EMPTY]).unwrap();
        assert_eq!(sys.independent_sets(), vec![CrossingSet::EMPTY]);
        assert_eq!(sys.independent_count(), 0);
    }

    #[test]
    fn rejects_non_antichain() {
        let err = IndependenceSystem::from_minimal_sets(3, vec![set(&[0]), set(&[0, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotAntichain(_, _)));
        let err = IndependenceSystem::from_minimal_sets(2, vec![set(&[2])]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 2, n: 2 });
    }
}
