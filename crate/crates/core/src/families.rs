//! The rational families `(2n+1)`, `(2n,2)` and `(2n+1,1,2n)`, and drivers
//! that check their unknotting numbers and matroid verdicts instance by
//! instance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{conway_to_pd, ConwaySpec, PlanarDiagram};
use crate::error::{Error, Result};
use crate::indep::{IndependenceSystem, SweepOptions, UnknottingMap};
use crate::report::{analyze, AnalysisReport};
use crate::set::CrossingSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `(2n+1)`
    TorusOdd,
    /// `(2n,2)`
    TwistPair,
    /// `(2n+1,1,2n)`
    BridgeTriple,
}

impl FamilyKind {
    /// Largest `n` run by default; beyond it the sweep leaves the
    /// minutes-scale budget.
    pub fn default_max_n(self) -> usize {
        match self {
            FamilyKind::TorusOdd => 5,
            FamilyKind::TwistPair => 4,
            FamilyKind::BridgeTriple => 2,
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus-odd" => Ok(FamilyKind::TorusOdd),
            "twist-pair" => Ok(FamilyKind::TwistPair),
            "bridge-triple" => Ok(FamilyKind::BridgeTriple),
            _ => Err(Error::InvalidSpec(format!("unknown family `{s}`"))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::TorusOdd => "torus-odd",
            FamilyKind::TwistPair => "twist-pair",
            FamilyKind::BridgeTriple => "bridge-triple",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("family index n must be at least 1".into()));
        }
        Ok(Self { kind, n })
    }

    pub fn word(&self) -> ConwaySpec {
        let n = self.n as i32;
        let twists = match self.kind {
            FamilyKind::TorusOdd => vec![2 * n + 1],
            FamilyKind::TwistPair => vec![2 * n, 2],
            FamilyKind::BridgeTriple => vec![2 * n + 1, 1, 2 * n],
        };
        ConwaySpec::new(twists).expect("family words have nonzero entries")
    }

    pub fn crossing_count(&self) -> usize {
        self.word().crossing_count()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} {}", self.kind, self.n, self.word())
    }
}

pub fn family_diagram(spec: &FamilySpec) -> Result<PlanarDiagram> {
    conway_to_pd(&spec.word())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub n: usize,
    pub u: usize,
    /// Every `n`-element crossing subset is an unknotting set.
    pub all_n_subsets_unknotting: bool,
    pub holds: bool,
}

/// Checks that the `(2n+1)` diagram has `u(D) = n` and that each of its
/// `n`-element crossing subsets unknots it.
pub fn verify_lemma_unknotting(n: usize, opts: &SweepOptions) -> Result<LemmaCheck> {
    let spec = FamilySpec::new(FamilyKind::TorusOdd, n)?;
    let d = family_diagram(&spec)?;
    let map = UnknottingMap::compute(&d, opts)?;
    let u = map.unknotting_number();
    let all = CrossingSet::full(d.crossing_count())
        .subsets()
        .filter(|s| s.len() == n)
        .all(|s| map.is_unknotting(s));
    Ok(LemmaCheck { n, u, all_n_subsets_unknotting: all, holds: u == n && all })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    /// `(2n+1,1,2n)` is not a matroid.
    A,
    /// `(2n+1)` is a matroid.
    B,
    /// `(2n,2)` is not a matroid for n >= 2; the figure-eight (n = 1) is.
    C,
}

impl Part {
    pub fn kind(self) -> FamilyKind {
        match self {
            Part::A => FamilyKind::BridgeTriple,
            Part::B => FamilyKind::TorusOdd,
            Part::C => FamilyKind::TwistPair,
        }
    }

    pub fn expected_matroid(self, n: usize) -> bool {
        match self {
            Part::A => false,
            Part::B => true,
            Part::C => n == 1,
        }
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Part::A),
            "b" => Ok(Part::B),
            "c" => Ok(Part::C),
            _ => Err(Error::InvalidSpec(format!("unknown part `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionCheck {
    pub part: Part,
    pub n: usize,
    pub expected_matroid: bool,
    /// Structural facts behind the verdict, one per line.
    pub checks: Vec<(String, bool)>,
    pub holds: bool,
    pub report: AnalysisReport,
}

/// Runs the matroid check on the family diagram for `part` at index `n`.
pub fn verify_proposition(part: Part, n: usize, opts: &SweepOptions) -> Result<PropositionCheck> {
    let spec = FamilySpec::new(part.kind(), n)?;
    let d = family_diagram(&spec)?;
    verify_proposition_on(part, n, &spec.to_string(), &d, opts)
}

/// Same as [`verify_proposition`] on a caller-supplied diagram of the family.
pub fn verify_proposition_on(
    part: Part,
    n: usize,
    id: &str,
    d: &PlanarDiagram,
    opts: &SweepOptions,
) -> Result<PropositionCheck> {
    let analysis = analyze(id, d, opts)?;
    let mut report = analysis.report;
    report.family = Some(FamilySpec::new(part.kind(), n)?.to_string());
    let sys = &analysis.system;
    let expected = part.expected_matroid(n);
    let mut checks = vec![(format!("matroid verdict is {expected}"), report.matroid == expected)];
    match part {
        Part::A => {
            let sizes: Vec<usize> = report.minimal_profile.keys().copied().collect();
            checks.push((format!("minimal unknotting set sizes {sizes:?} are not all equal"), sizes.len() > 1));
        }
        Part::B => {
            checks.push((format!("u(D) = {n}"), report.u == n));
            checks.push((
                format!("every maximal independent set has size {n}"),
                report.maximal_profile.keys().eq([n].iter()),
            ));
        }
        Part::C => {
            checks.push(("u(D) = 1".into(), report.u == 1));
            checks.push((
                format!("minimal unknotting sets of sizes 1 and {n} coexist"),
                has_sizes(sys, &[1, n]),
            ));
        }
    }
    let holds = checks.iter().all(|(_, ok)| *ok);
    Ok(PropositionCheck { part, n, expected_matroid: expected, checks, holds, report })
}

fn has_sizes(sys: &IndependenceSystem, sizes: &[usize]) -> bool {
    sizes
        .iter()
        .all(|&k| sys.minimal_unknotting_sets().iter().any(|s| s.len() == k))
}
