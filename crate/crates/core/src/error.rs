use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("block level {level} requested but only {available} h-parameters given")]
    LevelOutOfRange { level: usize, available: usize },

    #[error("a Prefix-tagged sequence has no finite closed form")]
    NotMaterializable,

    #[error("word of length {0} exceeds the materialization limit")]
    TooLong(u128),

    #[error("sequence is not admissible: {0}")]
    NotAdmissible(String),

    #[error("the sequence 1^inf is excluded here")]
    AllOnes,

    #[error("no sign change on bracket [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },

    #[error("sign could not be decided at {0}")]
    Undecided(String),

    #[error("base {0} is outside the admissible range")]
    BaseOutOfRange(String),

    #[error("value {0} is outside the admissible range")]
    ValueOutOfRange(String),

    #[error("m out of range: {0}")]
    SmallM(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
