//! U-independence systems of knot diagrams.

pub mod diagram;
pub mod error;
pub mod families;
pub mod golden;
pub mod indep;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod set;

pub use diagram::{conway_to_pd, load_catalog, parse_pd, ConwaySpec, Crossing, PlanarDiagram};
pub use error::{Error, Result};
pub use oracle::{is_unknot, jones_normalized, kauffman_bracket, Oracle};
pub use poly::LaurentPoly;
pub use set::CrossingSet;
pub use report::{analyze, Analysis, AnalysisReport};
