use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A set of crossing indices `0..n` stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct CrossingSet(u32);

/// Masks are `u32`, so no ground set may exceed this many crossings.
pub const MAX_GROUND: usize = 24;

impl CrossingSet {
    pub const EMPTY: Self = Self(0);

    pub fn from_mask(mask: u32) -> Self {
        Self(mask)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        Self(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        Self(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Largest element index plus one, or 0 for the empty set.
    pub fn span(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = CrossingSet> {
        let full = self.0;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(CrossingSet(s))
        })
    }

    /// Maps each element `i` to `perm[i]`.
    pub fn map(self, perm: &[usize]) -> Self {
        self.iter().fold(Self::EMPTY, |acc, i| acc.insert(perm[i]))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Size first, then lexicographic on the sorted element lists.
impl Ord for CrossingSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for CrossingSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for CrossingSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, i| s.insert(i))
    }
}

impl From<CrossingSet> for Vec<usize> {
    fn from(s: CrossingSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for CrossingSet {
    type Error = String;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        if let Some(&i) = v.iter().find(|&&i| i >= MAX_GROUND) {
            return Err(format!("crossing index {i} too large"));
        }
        Ok(v.into_iter().collect())
    }
}

impl fmt::Display for CrossingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
