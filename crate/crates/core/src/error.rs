use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("weight violation: {0}")]
    WeightViolation(String),

    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),

    #[error("enumeration cap exceeded: {what} needs more than {cap} elements")]
    CapExceeded { what: String, cap: u64 },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("relation violated by module matrices: {0}")]
    RelationViolated(String),

    #[error("matrix for generator g{0} is not invertible")]
    NotInvertible(usize),

    #[error("module is not faithful")]
    NotFaithful,

    #[error("non-unipotent action: {0}")]
    NotUnipotent(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
