//! Isomorphism of independence systems: a bijection of ground sets under
//! which `X ∈ I1` iff `φ(X) ∈ I2`.
//!
//! Both families are determined by their circuits, so the search maps
//! circuits onto circuits. Elements are matched only to elements with the
//! same local invariants, and every complete candidate is re-verified over
//! all subsets before it is returned.

use std::collections::{BTreeMap, HashSet};

use super::system::IndependenceSystem;
use crate::set::CrossingSet;

struct Side<'a> {
    sys: &'a IndependenceSystem,
    circuits: Vec<CrossingSet>,
    circuit_set: HashSet<CrossingSet>,
    invariants: Vec<Vec<usize>>,
}

impl<'a> Side<'a> {
    fn new(sys: &'a IndependenceSystem) -> Self {
        let circuits = sys.circuits();
        let n = sys.ground_size();
        let independent = sys.independent_sets();
        let invariants = (0..n)
            .map(|e| {
                // circuits through e by size, then independent sets through e by size
                let mut v = vec![0usize; 2 * (n + 1)];
                for c in circuits.iter().filter(|c| c.contains(e)) {
                    v[c.len()] += 1;
                }
                for s in independent.iter().filter(|s| s.contains(e)) {
                    v[n + 1 + s.len()] += 1;
                }
                v
            })
            .collect();
        let circuit_set = circuits.iter().copied().collect();
        Self { sys, circuits, circuit_set, invariants }
    }

    fn circuit_profile(&self) -> BTreeMap<usize, usize> {
        super::system::size_profile(self.circuits.iter().copied())
    }

    fn circuits_within(&self, s: CrossingSet) -> usize {
        self.circuits.iter().filter(|c| c.is_subset(s)).count()
    }
}

/// Returns `phi` with `phi[i]` the image of element `i`, or `None` when the
/// systems are not isomorphic.
pub fn independence_isomorphic(a: &IndependenceSystem, b: &IndependenceSystem) -> Option<Vec<usize>> {
    let n = a.ground_size();
    if n != b.ground_size() || a.independent_profile() != b.independent_profile() {
        return None;
    }
    let (sa, sb) = (Side::new(a), Side::new(b));
    if sa.circuit_profile() != sb.circuit_profile() {
        return None;
    }
    let mut inv_a: Vec<&Vec<usize>> = sa.invariants.iter().collect();
    let mut inv_b: Vec<&Vec<usize>> = sb.invariants.iter().collect();
    inv_a.sort();
    inv_b.sort();
    if inv_a != inv_b {
        return None;
    }

    // Map rarest invariant classes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (sa.invariants.iter().filter(|v| **v == sa.invariants[e]).count(), e));

    let mut search = Search { a: &sa, b: &sb, order, phi: vec![usize::MAX; n], used: vec![false; n] };
    if search.extend(0) && verify(a, b, &search.phi) {
        Some(search.phi)
    } else {
        None
    }
}

struct Search<'a, 'b> {
    a: &'a Side<'b>,
    b: &'a Side<'b>,
    order: Vec<usize>,
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_, '_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return verify(self.a.sys, self.b.sys, &self.phi);
        }
        let e = self.order[depth];
        let domain: CrossingSet = self.order[..=depth].iter().copied().collect();
        for f in 0..self.phi.len() {
            if self.used[f] || self.b.invariants[f] != self.a.invariants[e] {
                continue;
            }
            self.phi[e] = f;
            self.used[f] = true;
            if self.consistent(e, domain) && self.extend(depth + 1) {
                return true;
            }
            self.used[f] = false;
            self.phi[e] = usize::MAX;
        }
        false
    }

    /// Circuits inside the mapped domain that involve `e` map to circuits,
    /// and the image holds no extra circuits.
    fn consistent(&self, e: usize, domain: CrossingSet) -> bool {
        let image = domain.map(&self.phi);
        let mapped_ok = self
            .a
            .circuits
            .iter()
            .filter(|c| c.contains(e) && c.is_subset(domain))
            .all(|c| self.b.circuit_set.contains(&c.map(&self.phi)));
        mapped_ok && self.a.circuits_within(domain) == self.b.circuits_within(image)
    }
}

/// Exhaustive check that `phi` preserves membership in both directions.
pub fn verify(a: &IndependenceSystem, b: &IndependenceSystem, phi: &[usize]) -> bool {
    let n = a.ground_size();
    if n != b.ground_size() || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &f in phi {
        if f >= n || std::mem::replace(&mut seen[f], true) {
            return false;
        }
    }
    a.ground_set()
        .subsets()
        .all(|x| a.is_independent(x) == b.is_independent(x.map(phi)))
}
