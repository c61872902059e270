use thiserror::Error;

use crate::number_theory::ShorInputRejection;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("label {label} out of range for register {register} of dimension {dimension}")]
    LabelOutOfRange {
        register: usize,
        label: usize,
        dimension: usize,
    },

    #[error("register {register} does not exist (layout has {count} registers)")]
    NoSuchRegister { register: usize, count: usize },

    #[error("invalid register layout: {0}")]
    InvalidLayout(String),

    #[error("composite dimension {dimension} exceeds the cap of {cap}")]
    TooLarge { dimension: usize, cap: usize },

    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("state has zero norm")]
    ZeroNorm,

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("{a} is not coprime to {modulus}")]
    NotCoprime { a: u64, modulus: u64 },

    #[error("invalid truth table: {0}")]
    InvalidTruthTable(String),

    #[error("promise violated: {0}")]
    PromiseViolation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shor input rejected: {0}")]
    ShorInput(ShorInputRejection),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
