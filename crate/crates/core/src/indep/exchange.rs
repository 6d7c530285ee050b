use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::map::UnknottingMap;
use crate::set::CrossingSet;

/// A failure of the exchange property: no `s ∈ S` makes `S - {s} ∪ {r}` a
/// minimal unknotting set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeWitness {
    pub s: CrossingSet,
    pub r_set: CrossingSet,
    pub r: usize,
}

/// Checks the exchange property of a family of minimal unknotting sets:
/// for all `S`, `R` in the family (including `S = R`) and every `r ∈ R`
/// there is an `s ∈ S` with `S - {s} ∪ {r}` in the family. Returns the first
/// counterexample in canonical order.
pub fn exchange_property(minimal: &[CrossingSet]) -> Result<(), ExchangeWitness> {
    let family: HashSet<CrossingSet> = minimal.iter().copied().collect();
    for &s_set in minimal {
        for &r_set in minimal {
            for r in r_set.iter() {
                let ok = s_set.iter().any(|s| family.contains(&s_set.remove(s).insert(r)));
                if !ok {
                    return Err(ExchangeWitness { s: s_set, r_set, r });
                }
            }
        }
    }
    Ok(())
}

pub fn exchange_property_minimal(m: &UnknottingMap) -> Result<(), ExchangeWitness> {
    exchange_property(&m.minimal_unknotting_sets())
}
