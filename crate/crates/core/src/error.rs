use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor must be positive, got {0}")]
    InvalidConductor(i64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid character table: {0}")]
    InvalidTable(String),

    #[error("{what} exceeds the configured cap ({value} > {cap})")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("weight mismatch: expected {expected}, got {got}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("partition {0} is not strict")]
    NotStrict(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("character {0} is not linear")]
    NotLinear(String),

    #[error("element is not in HG_n: {0}")]
    NotInSubgroup(String),

    #[error("twisted indicator out of range for {chi} (ξ = {xi}): {value}")]
    IndicatorOutOfRange {
        xi: String,
        chi: String,
        value: String,
    },

    #[error("label {0} is not a constituent of the induced character")]
    NotInSupport(String),

    #[error("Hecke element is supported outside the admissible double cosets at {0}")]
    SupportViolation(String),

    #[error("no closed form applies: {0}")]
    NoClosedForm(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
