use thiserror::Error;

use crate::fincat::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("category axioms violated: {}", format_violations(.0))]
    Category(Vec<Violation>),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("invalid functor: {0}")]
    Functor(String),

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("truncation mismatch: expected level {expected}, found {found}")]
    TruncationMismatch { expected: usize, found: usize },

    #[error("invalid simplicial set: {0}")]
    SSet(String),

    #[error("not a simplicial map: {0}")]
    SSetMap(String),

    #[error("degree {degree} is out of range for truncation level {k}")]
    Degree { degree: usize, k: usize },

    #[error("endpoint mismatch: {0}")]
    Endpoint(String),

    #[error("required (co)limit does not exist: {0}")]
    LimitMissing(String),

    #[error("hypothesis not established: {0}")]
    Hypothesis(String),

    #[error("no resolution found within the model category: {0}")]
    NoResolution(String),

    #[error("length bound exhausted: {0}")]
    BoundExhausted(String),

    #[error("invalid model structure: {0}")]
    Model(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
