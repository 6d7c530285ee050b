//! Unknot detection through the Kauffman bracket.
//!
//! The bracket is evaluated as a state sum over all `2^n` smoothings, counting
//! loops of each state with a disjoint-set forest over the edge arcs. A
//! diagram is declared unknotted when its writhe-normalized bracket equals 1.

use rayon::prelude::*;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::set::MAX_GROUND;

pub const DEFAULT_CAP: usize = 14;

/// Recorded in every report: the assumption the unknot test rests on.
pub const ORACLE_NOTE: &str = "unknot test: writhe-normalized Kauffman bracket (Jones polynomial) equals 1; \
     assumes the Jones polynomial detects the unknot within the crossing cap";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
    /// Split the state sum across the rayon pool.
    pub parallel: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, parallel: false }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap, ..Self::default() }
    }

    pub fn check_cap(&self, d: &PlanarDiagram) -> Result<()> {
        let n = d.crossing_count();
        let cap = self.cap.min(MAX_GROUND);
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        Ok(())
    }

    pub fn bracket(&self, d: &PlanarDiagram) -> Result<LaurentPoly> {
        self.check_cap(d)?;
        let smoothing = Smoothings::new(d);
        let n = d.crossing_count();
        let table = if self.parallel {
            (0u32..1 << n)
                .into_par_iter()
                .fold(|| StateTable::new(n), |mut t, s| {
                    t.record(&smoothing, s);
                    t
                })
                .reduce(|| StateTable::new(n), StateTable::merge)
        } else {
            let mut t = StateTable::new(n);
            for s in 0u32..1 << n {
                t.record(&smoothing, s);
            }
            t
        };
        table.into_bracket()
    }

    /// `(-A^3)^(-w) <D>`.
    pub fn jones(&self, d: &PlanarDiagram) -> Result<LaurentPoly> {
        let w = d.writhe();
        let sign = if w % 2 == 0 { 1 } else { -1 };
        self.bracket(d)?.checked_scale(sign).map(|p| p.shift(-3 * w))
    }

    pub fn is_unknot(&self, d: &PlanarDiagram) -> Result<bool> {
        Ok(self.jones(d)?.is_one())
    }
}

pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    Oracle::default().bracket(d)
}

pub fn jones_normalized(d: &PlanarDiagram) -> Result<LaurentPoly> {
    Oracle::default().jones(d)
}

pub fn is_unknot(d: &PlanarDiagram) -> Result<bool> {
    Oracle::default().is_unknot(d)
}

/// Edge pairs joined by the A- and B-smoothing at each crossing, as 0-based
/// edge indices.
struct Smoothings {
    edges: usize,
    a: Vec<[(usize, usize); 2]>,
    b: Vec<[(usize, usize); 2]>,
}

impl Smoothings {
    fn new(d: &PlanarDiagram) -> Self {
        let mut a = Vec::with_capacity(d.crossing_count());
        let mut b = Vec::with_capacity(d.crossing_count());
        for c in d.crossings() {
            let e = c.edges.map(|x| x as usize - 1);
            // The A-smoothing joins each under-strand position to the next
            // position counterclockwise.
            let u = match c.under() {
                crate::diagram::Diagonal::Even => 0,
                crate::diagram::Diagonal::Odd => 1,
            };
            let pair = |p: usize| (e[p % 4], e[(p + 1) % 4]);
            a.push([pair(u), pair(u + 2)]);
            b.push([pair(u + 1), pair(u + 3)]);
        }
        Self { edges: d.edge_count(), a, b }
    }

    fn loops(&self, state: u32, dsu: &mut Dsu) -> usize {
        dsu.reset(self.edges);
        for (i, (a, b)) in self.a.iter().zip(&self.b).enumerate() {
            let pairs = if state >> i & 1 == 0 { a } else { b };
            for &(x, y) in pairs {
                dsu.union(x, y);
            }
        }
        dsu.components
    }
}

/// Counts of states by (number of B-smoothings, loop count).
struct StateTable {
    n: usize,
    counts: Vec<u64>,
    dsu: Dsu,
}

impl StateTable {
    fn new(n: usize) -> Self {
        // loops range over 1..=n+1 for a connected diagram; index by loops directly
        Self { n, counts: vec![0; (n + 1) * (n + 2)], dsu: Dsu::default() }
    }

    fn record(&mut self, sm: &Smoothings, state: u32) {
        let loops = if self.n == 0 { 1 } else { sm.loops(state, &mut self.dsu) };
        let b = state.count_ones() as usize;
        self.counts[b * (self.n + 2) + loops] += 1;
    }

    fn merge(mut self, other: Self) -> Self {
        for (x, y) in self.counts.iter_mut().zip(other.counts) {
            *x += y;
        }
        self
    }

    fn into_bracket(self) -> Result<LaurentPoly> {
        let n = self.n;
        let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)])?;
        let mut delta_pow = vec![LaurentPoly::one()];
        for k in 1..=n {
            delta_pow.push(delta_pow[k - 1].checked_mul(&delta)?);
        }
        let mut out = LaurentPoly::zero();
        for b in 0..=n {
            for loops in 1..=n + 1 {
                let count = self.counts[b * (n + 2) + loops];
                if count == 0 {
                    continue;
                }
                let count = i64::try_from(count).map_err(|_| Error::CoefficientOverflow)?;
                let term = delta_pow[loops - 1]
                    .checked_scale(count)?
                    .shift(n as i32 - 2 * b as i32);
                out = out.checked_add(&term)?;
            }
        }
        Ok(out)
    }
}

#[derive(Default)]
struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
        self.components = n;
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx] = ry;
            self.components -= 1;
        }
    }
}
