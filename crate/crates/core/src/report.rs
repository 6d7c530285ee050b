use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::PlanarDiagram;
use crate::error::Result;
use crate::indep::{
    exchange_property, size_profile, ExchangeWitness, IndependenceSystem, MatroidWitness,
    SweepOptions, UnknottingMap,
};
use crate::oracle::ORACLE_NOTE;
use crate::set::CrossingSet;

/// Everything computed about one diagram. Crossing sets are lists of
/// 0-based crossing indices; `crossings` gives their display names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub diagram: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: usize,
    pub crossings: Vec<String>,
    pub u: usize,
    pub minimal_unknotting_sets: Vec<CrossingSet>,
    pub minimal_profile: BTreeMap<usize, usize>,
    pub independent_profile: BTreeMap<usize, usize>,
    pub maximal_profile: BTreeMap<usize, usize>,
    pub exchange: bool,
    pub matroid: bool,
    /// `None` when undefined (the diagram is already unknotted).
    pub chromatic: Option<usize>,
    pub witnesses: Witnesses,
    pub oracle_note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub exchange: Option<ExchangeWitness>,
    pub matroid: Option<MatroidWitness>,
    pub chromatic_partition: Option<Vec<CrossingSet>>,
}

/// Sweep and analysis results kept together, for callers that need more
/// than the summary.
pub struct Analysis {
    pub map: UnknottingMap,
    pub system: IndependenceSystem,
    pub report: AnalysisReport,
}

pub fn analyze(id: &str, d: &PlanarDiagram, opts: &SweepOptions) -> Result<Analysis> {
    let map = UnknottingMap::compute(d, opts)?;
    let system = IndependenceSystem::from_map(&map);
    let report = AnalysisReport::from_parts(id, d, &map, &system);
    Ok(Analysis { map, system, report })
}

impl AnalysisReport {
    pub fn from_parts(
        id: &str,
        d: &PlanarDiagram,
        map: &UnknottingMap,
        system: &IndependenceSystem,
    ) -> Self {
        let minimal = system.minimal_unknotting_sets().to_vec();
        let exchange = exchange_property(&minimal);
        let matroid = system.matroid_check();
        let coloring = system.chromatic_number().ok();
        Self {
            diagram: id.to_string(),
            family: None,
            n: d.crossing_count(),
            crossings: (0..d.crossing_count()).map(|i| d.crossing_name(i)).collect(),
            u: map.unknotting_number(),
            minimal_profile: size_profile(minimal.iter().copied()),
            minimal_unknotting_sets: minimal,
            independent_profile: system.independent_profile(),
            maximal_profile: size_profile(system.maximal_independent_sets()),
            exchange: exchange.is_ok(),
            matroid: matroid.is_ok(),
            chromatic: coloring.as_ref().map(|c| c.number),
            witnesses: Witnesses {
                exchange: exchange.err(),
                matroid: matroid.err(),
                chromatic_partition: coloring.map(|c| c.partition),
            },
            oracle_note: ORACLE_NOTE.to_string(),
            timing_ms: None,
        }
    }

    fn names(&self, s: CrossingSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.crossings[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let profile = |p: &BTreeMap<usize, usize>| {
            p.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
        };
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "diagram              {}", self.diagram);
        if let Some(f) = &self.family {
            let _ = writeln!(out, "family               {f}");
        }
        let _ = writeln!(out, "crossings            {}", self.n);
        let _ = writeln!(out, "u(D)                 {}", self.u);
        let _ = writeln!(out, "minimal unknotting   {}  [{}]", self.minimal_unknotting_sets.len(), profile(&self.minimal_profile));
        let _ = writeln!(out, "independent sets     {}  [{}]", self.independent_profile.values().sum::<usize>(), profile(&self.independent_profile));
        let _ = writeln!(out, "maximal independent  {}  [{}]", self.maximal_profile.values().sum::<usize>(), profile(&self.maximal_profile));
        let _ = writeln!(out, "exchange property    {}", yes_no(self.exchange));
        let _ = writeln!(out, "matroid              {}", yes_no(self.matroid));
        match self.chromatic {
            Some(k) => {
                let _ = writeln!(out, "chromatic number     {k}");
            }
            None => {
                let _ = writeln!(out, "chromatic number     undefined");
            }
        }
        let sets: Vec<String> = self.minimal_unknotting_sets.iter().map(|&s| self.names(s)).collect();
        let _ = writeln!(out, "minimal sets         {}", sets.join(" "));
        if let Some(w) = &self.witnesses.exchange {
            let _ = writeln!(
                out,
                "exchange fails       S={} R={} r={}",
                self.names(w.s),
                self.names(w.r_set),
                self.crossings[w.r]
            );
        }
        match &self.witnesses.matroid {
            Some(MatroidWitness::CardinalityMismatch { smaller, larger }) => {
                let _ = writeln!(out, "matroid fails        bases {} and {} differ in size", self.names(*smaller), self.names(*larger));
            }
            Some(MatroidWitness::Exchange { m1, m2, x }) => {
                let _ = writeln!(out, "matroid fails        M1={} M2={} x={}", self.names(*m1), self.names(*m2), self.crossings[*x]);
            }
            None => {}
        }
        if let Some(p) = &self.witnesses.chromatic_partition {
            let parts: Vec<String> = p.iter().map(|&s| self.names(s)).collect();
            let _ = writeln!(out, "minimum partition    {}", parts.join(" "));
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time                 {ms} ms");
        }
        let _ = writeln!(out, "note                 {}", self.oracle_note);
        out
    }
}
