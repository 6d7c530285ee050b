use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed PD token `{0}`")]
    Malformed(String),

    #[error("PD token `{token}` has {found} entries, expected 4")]
    Arity { token: String, found: usize },

    #[error("edge label {label} appears {count} times, expected exactly 2")]
    LabelMultiplicity { label: u32, count: usize },

    #[error("diagram has {0} components; only knots are supported")]
    MultiComponent(usize),

    #[error("invalid Conway word: {0}")]
    InvalidSpec(String),

    #[error("crossing index {index} out of range for a {n}-crossing diagram")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("unknown catalog knot `{0}`")]
    UnknownName(String),

    #[error("{n} crossings exceeds the crossing cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("polynomial coefficient overflow")]
    CoefficientOverflow,

    #[error("could not start worker pool: {0}")]
    Workers(String),

    #[error("I-chromatic number is undefined: {0}")]
    ChromaticUndefined(&'static str),

    #[error("ground set sizes differ ({0} vs {1})")]
    GroundSizeMismatch(usize, usize),

    #[error("not an antichain: {0} is contained in {1}")]
    NotAntichain(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
