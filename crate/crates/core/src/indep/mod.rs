//! The U-independence system of a diagram and the questions asked of it.

mod chromatic;
mod exchange;
mod iso;
mod map;
mod matroid;
mod system;

pub use chromatic::{is_valid_partition, Coloring};
pub use exchange::{exchange_property, exchange_property_minimal, ExchangeWitness};
pub use iso::{independence_isomorphic, verify as verify_isomorphism};
pub use map::{unknotting_map, SweepOptions, UnknottingMap};
pub use matroid::{exchange_over, MatroidWitness};
pub use system::{build_system, size_profile, IndependenceSystem};
pub use crate::set::CrossingSet;
