use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("product {0} lies outside the validated coefficient fragment")]
    OutsideFragment(String),
    #[error("mixed-grading coefficient {0}")]
    MixedGrading(String),
    #[error("parse error at position {pos}: {msg} (expected {expected})")]
    Parse {
        pos: usize,
        msg: String,
        expected: String,
    },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("undecidable here: {0}")]
    Undecidable(String),
    #[error("invalid rule {index}: {reason}")]
    InvalidRule { index: usize, reason: String },
    #[error("{0} is not invertible in this component")]
    NotInvertible(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
