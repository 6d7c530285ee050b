//! Knot diagrams as PD codes.
//!
//! A crossing stores its four edge labels in counterclockwise planar order
//! together with the diagonal (pair of opposite positions) that carries the
//! over-strand. Parsed PD tuples start at the incoming under-strand, so the
//! over-strand sits on positions 1 and 3.

mod catalog;
mod conway;
mod pd;

use std::fmt;

use crate::error::{Error, Result};
use crate::set::CrossingSet;

pub use catalog::{catalog_names, load_catalog};
pub use conway::{conway_to_pd, ConwaySpec};
pub use pd::parse_pd;

/// A pair of opposite positions of a crossing tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagonal {
    /// Positions 0 and 2.
    Even,
    /// Positions 1 and 3.
    Odd,
}

impl Diagonal {
    pub fn of(pos: usize) -> Self {
        if pos.is_multiple_of(2) {
            Diagonal::Even
        } else {
            Diagonal::Odd
        }
    }

    pub fn other(self) -> Self {
        match self {
            Diagonal::Even => Diagonal::Odd,
            Diagonal::Odd => Diagonal::Even,
        }
    }

    fn idx(self) -> usize {
        match self {
            Diagonal::Even => 0,
            Diagonal::Odd => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [u32; 4],
    pub over: Diagonal,
}

impl Crossing {
    /// A crossing from a PD tuple, whose first entry is an under-strand edge.
    pub fn from_pd(edges: [u32; 4]) -> Self {
        Self { edges, over: Diagonal::Odd }
    }

    pub fn under(&self) -> Diagonal {
        self.over.other()
    }

    pub fn switched(&self) -> Self {
        Self { edges: self.edges, over: self.over.other() }
    }
}

/// A validated knot diagram. Immutable once built; all transformations
/// return new diagrams.
#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    labels: Option<Vec<String>>,
    // Position through which the traversal enters each crossing, per diagonal.
    entry: Vec<[u8; 2]>,
    // Traversal as (crossing, entry position), starting at crossing 0 position 0.
    trace: Vec<(usize, u8)>,
}

impl PlanarDiagram {
    /// The 0-crossing diagram of the unknot.
    pub fn unknot() -> Self {
        Self { crossings: Vec::new(), labels: None, entry: Vec::new(), trace: Vec::new() }
    }

    /// Validates the crossings and fixes an orientation by tracing the strand
    /// from position 0 of the first crossing.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self> {
        check_labels(&crossings)?;
        let (trace, components) = trace_components(&crossings);
        if components != 1 && !crossings.is_empty() {
            return Err(Error::MultiComponent(components));
        }
        let mut entry = vec![[0u8; 2]; crossings.len()];
        for &(c, p) in &trace {
            entry[c][Diagonal::of(p as usize).idx()] = p;
        }
        Ok(Self { crossings, labels: None, entry, trace })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.crossings.len(), "one label per crossing");
        self.labels = Some(labels);
        self
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of crossing `i`: its label if present, else `c<i+1>`.
    pub fn crossing_name(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("c{}", i + 1),
        }
    }

    /// Re-checks the structural invariants.
    pub fn validate(&self) -> Result<()> {
        validate(&self.crossings)
    }

    /// Position at which the oriented strand enters crossing `i` along the
    /// given diagonal.
    pub fn entry_position(&self, i: usize, d: Diagonal) -> usize {
        self.entry[i][d.idx()] as usize
    }

    /// Sign of crossing `i`: +1 when the over-strand enters one position
    /// clockwise of the incoming under-strand (right-handed), else -1.
    pub fn crossing_sign(&self, i: usize) -> i32 {
        let c = &self.crossings[i];
        let under_in = self.entry_position(i, c.under());
        let over_in = self.entry_position(i, c.over);
        if over_in == (under_in + 3) % 4 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.crossing_count()).map(|i| self.crossing_sign(i)).sum()
    }

    /// Traversal of the knot as (crossing, passes over) pairs.
    pub fn passes(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.trace
            .iter()
            .map(|&(c, p)| (c, Diagonal::of(p as usize) == self.crossings[c].over))
    }

    /// True when over- and under-passes alternate along the knot.
    pub fn is_alternating(&self) -> bool {
        let passes: Vec<bool> = self.passes().map(|(_, o)| o).collect();
        (0..passes.len()).all(|k| passes[k] != passes[(k + 1) % passes.len()])
    }

    /// Switches every crossing in `s`.
    pub fn switch_crossings(&self, s: CrossingSet) -> Result<Self> {
        let n = self.crossing_count();
        if s.span() > n {
            return Err(Error::IndexOutOfRange { index: s.span() - 1, n });
        }
        let mut out = self.clone();
        for i in s.iter() {
            out.crossings[i] = out.crossings[i].switched();
        }
        Ok(out)
    }

    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.crossings {
            *c = c.switched();
        }
        out
    }

    /// PD tuples, each rotated to start at the incoming under-strand.
    pub fn pd_tuples(&self) -> Vec<[u32; 4]> {
        self.crossings
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let s = self.entry_position(i, c.under());
                [0, 1, 2, 3].map(|k| c.edges[(s + k) % 4])
            })
            .collect()
    }

    pub fn to_pd_string(&self) -> String {
        self.pd_tuples()
            .iter()
            .map(|t| format!("X[{},{},{},{}]", t[0], t[1], t[2], t[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Two diagrams are equal when they serialize to the same PD code; display
/// labels are ignored.
impl PartialEq for PlanarDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.pd_tuples() == other.pd_tuples()
    }
}

impl Eq for PlanarDiagram {}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Checks that every label `1..=2n` appears exactly twice and that the
/// strands close up into a single component.
pub fn validate(crossings: &[Crossing]) -> Result<()> {
    check_labels(crossings)?;
    let (_, components) = trace_components(crossings);
    if components > 1 {
        return Err(Error::MultiComponent(components));
    }
    Ok(())
}

fn check_labels(crossings: &[Crossing]) -> Result<()> {
    let m = 2 * crossings.len();
    let mut count = vec![0usize; m + 1];
    for c in crossings {
        for &e in &c.edges {
            if e == 0 || e as usize > m {
                return Err(Error::LabelMultiplicity {
                    label: e,
                    count: crossings.iter().flat_map(|c| c.edges).filter(|&x| x == e).count(),
                });
            }
            count[e as usize] += 1;
        }
    }
    match (1..=m).find(|&l| count[l] != 2) {
        Some(l) => Err(Error::LabelMultiplicity { label: l as u32, count: count[l] }),
        None => Ok(()),
    }
}

/// Follows strands through the crossings. Returns the traversal of the
/// component through (crossing 0, position 0) and the number of components.
/// Assumes labels are already checked.
fn trace_components(crossings: &[Crossing]) -> (Vec<(usize, u8)>, usize) {
    let n = crossings.len();
    if n == 0 {
        return (Vec::new(), 0);
    }
    // slot = 4 * crossing + position
    let mut first = vec![usize::MAX; 2 * n + 1];
    let mut partner = vec![0usize; 4 * n];
    for (c, x) in crossings.iter().enumerate() {
        for (p, &e) in x.edges.iter().enumerate() {
            let slot = 4 * c + p;
            let e = e as usize;
            if first[e] == usize::MAX {
                first[e] = slot;
            } else {
                partner[slot] = first[e];
                partner[first[e]] = slot;
            }
        }
    }
    let mut visited = vec![false; 4 * n];
    let mut trace = Vec::with_capacity(2 * n);
    let mut components = 0;
    for start in 0..4 * n {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut slot = start;
        loop {
            let exit = slot - slot % 4 + (slot % 4 + 2) % 4;
            visited[slot] = true;
            visited[exit] = true;
            if components == 1 {
                trace.push((slot / 4, (slot % 4) as u8));
            }
            slot = partner[exit];
            if slot == start {
                break;
            }
        }
    }
    (trace, components)
}
