//! Expected values shipped with the crate, for self-diffing reproductions.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::diagram::{conway_to_pd, load_catalog, ConwaySpec, PlanarDiagram};
use crate::error::{Error, Result};
use crate::report::AnalysisReport;

const EXPECTED: &str = include_str!("../data/expected.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct Golden {
    /// Exchange-property verdict per catalog knot.
    pub table1: BTreeMap<String, bool>,
    #[serde(rename = "example")]
    pub examples: Vec<Example>,
    #[serde(rename = "isomorphic")]
    pub isomorphisms: Vec<IsoExample>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Example {
    pub diagram: String,
    pub u: Option<usize>,
    /// Keyed by set size; TOML keys are strings.
    pub minimal_profile: Option<BTreeMap<String, usize>>,
    pub exchange: Option<bool>,
    pub matroid: Option<bool>,
    pub chromatic: Option<usize>,
    pub independent_size2: Option<usize>,
    pub independent_total: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct IsoExample {
    pub pair: [String; 2],
    pub expected: bool,
}

/// One disagreement between a computed and an expected value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub diagram: String,
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Golden {
    pub fn load() -> Self {
        toml::from_str(EXPECTED).expect("bundled expected.toml parses")
    }

    /// Table rows in catalog order.
    pub fn table1_rows(&self) -> Vec<(&str, bool)> {
        let mut rows: Vec<(&str, bool)> = self.table1.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        rows.sort_by_key(|(k, _)| knot_order(k));
        rows
    }
}

fn knot_order(name: &str) -> (u32, u32) {
    let mut it = name.split('_').map(|p| p.parse().unwrap_or(u32::MAX));
    (it.next().unwrap_or(0), it.next().unwrap_or(0))
}

impl Example {
    pub fn compare(&self, r: &AnalysisReport) -> Vec<Mismatch> {
        let mut out = Vec::new();
        let mut check = |field, expected: Option<String>, actual: String| {
            if let Some(e) = expected {
                if e != actual {
                    out.push(Mismatch { diagram: self.diagram.clone(), field, expected: e, actual });
                }
            }
        };
        check("u", self.u.map(|v| v.to_string()), r.u.to_string());
        let actual: BTreeMap<String, usize> = r.minimal_profile.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        check("minimal_profile", self.minimal_profile.as_ref().map(|p| format!("{p:?}")), format!("{actual:?}"));
        check("exchange", self.exchange.map(|v| v.to_string()), r.exchange.to_string());
        check("matroid", self.matroid.map(|v| v.to_string()), r.matroid.to_string());
        check("chromatic", self.chromatic.map(|v| format!("{v:?}")), format!("{:?}", r.chromatic.unwrap_or(0)));
        check(
            "independent_size2",
            self.independent_size2.map(|v| v.to_string()),
            r.independent_profile.get(&2).copied().unwrap_or(0).to_string(),
        );
        check(
            "independent_total",
            self.independent_total.map(|v| v.to_string()),
            r.independent_profile.values().sum::<usize>().to_string(),
        );
        out
    }
}

/// A catalog name such as `7_3`, or a Conway word in parentheses such as
/// `(5,1,4)`.
pub fn diagram_by_id(id: &str) -> Result<PlanarDiagram> {
    if id.starts_with('(') {
        conway_to_pd(&id.parse::<ConwaySpec>()?)
    } else if id.is_empty() {
        Err(Error::UnknownName(id.into()))
    } else {
        load_catalog(id)
    }
}
