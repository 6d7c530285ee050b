use super::{parse_pd, PlanarDiagram};
use crate::error::{Error, Result};

const ROLFSEN: &str = include_str!("../../data/rolfsen.txt");

fn records() -> impl Iterator<Item = (&'static str, &'static str)> {
    ROLFSEN
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.split_once(char::is_whitespace))
}

/// Names in the embedded table, in table order.
pub fn catalog_names() -> Vec<&'static str> {
    records().map(|(n, _)| n).collect()
}

/// Loads the minimal diagram `m_t` of the embedded Rolfsen table, e.g. `"7_3"`.
pub fn load_catalog(name: &str) -> Result<PlanarDiagram> {
    let (_, pd) = records()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    parse_pd(pd)
}
