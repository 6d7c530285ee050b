use bitvec::prelude::*;
use rayon::prelude::*;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::set::CrossingSet;

/// How the `2^n` switch sweep is run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub oracle: Oracle,
    /// Worker threads; 1 runs sequentially, 0 uses the rayon default.
    pub workers: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { oracle: Oracle::default(), workers: 1 }
    }
}

/// For every crossing subset `s`, whether switching `s` unknots the diagram.
#[derive(Clone, Debug)]
pub struct UnknottingMap {
    diagram: PlanarDiagram,
    status: BitVec,
}

pub fn unknotting_map(d: &PlanarDiagram) -> Result<UnknottingMap> {
    UnknottingMap::compute(d, &SweepOptions::default())
}

impl UnknottingMap {
    pub fn compute(d: &PlanarDiagram, opts: &SweepOptions) -> Result<Self> {
        opts.oracle.check_cap(d)?;
        let n = d.crossing_count();
        let test = |mask: u32| -> Result<bool> {
            let switched = d.switch_crossings(CrossingSet::from_mask(mask))?;
            opts.oracle.is_unknot(&switched)
        };
        let flags: Vec<bool> = if opts.workers == 1 {
            (0u32..1 << n).map(test).collect::<Result<_>>()?
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .map_err(|e| Error::Workers(e.to_string()))?;
            pool.install(|| (0u32..1 << n).into_par_iter().map(test).collect::<Result<_>>())?
        };
        Ok(Self { diagram: d.clone(), status: flags.into_iter().collect() })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn ground_size(&self) -> usize {
        self.diagram.crossing_count()
    }

    pub fn is_unknotting(&self, s: CrossingSet) -> bool {
        self.status[s.index()]
    }

    pub fn status(&self) -> &BitSlice {
        &self.status
    }

    /// Bit `s` set iff some proper subset of `s` is an unknotting set.
    pub fn proper_unknotting_subset_table(&self) -> BitVec {
        proper_subset_closure(self.ground_size(), &self.status)
    }

    /// Unknotting sets with no proper unknotting subset, sorted by size then
    /// lexicographically.
    pub fn minimal_unknotting_sets(&self) -> Vec<CrossingSet> {
        let below = self.proper_unknotting_subset_table();
        let mut out: Vec<CrossingSet> = (0..self.status.len())
            .filter(|&s| self.status[s] && !below[s])
            .map(|s| CrossingSet::from_mask(s as u32))
            .collect();
        out.sort();
        out
    }

    /// `u(D)`: the smallest size of an unknotting set (0 if already unknotted).
    pub fn unknotting_number(&self) -> usize {
        self.minimal_unknotting_sets()
            .first()
            .map(|s| s.len())
            .expect("every diagram has an unknotting set")
    }

    /// U-independence read straight off the switch table: `W \ S` is not
    /// unknotting for any nonempty `S ⊆ W`.
    pub fn is_u_independent_literal(&self, w: CrossingSet) -> bool {
        w.subsets()
            .filter(|s| !s.is_empty())
            .all(|s| !self.is_unknotting(w.difference(s)))
    }
}

/// `out[s]` is set iff `marked[t]` for some proper subset `t` of `s`.
pub(crate) fn proper_subset_closure(n: usize, marked: &BitSlice) -> BitVec {
    let size = 1usize << n;
    let mut out = bitvec![0; size];
    for s in 1..size {
        let mut m = s;
        while m != 0 {
            let i = m.trailing_zeros();
            m &= m - 1;
            let t = s & !(1 << i);
            if marked[t] || out[t] {
                out.set(s, true);
                break;
            }
        }
    }
    out
}
