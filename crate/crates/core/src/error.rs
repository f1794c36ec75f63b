use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("multiplicities sum to {got}, expected level {expected}")]
    SumMismatch { expected: u32, got: u64 },

    #[error("expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("entry {entry} at position {position} is out of range for modulus {modulus}")]
    EntryOutOfRange {
        position: usize,
        entry: u32,
        modulus: u32,
    },

    #[error("exact integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("orbit of size {size} exceeds the enumeration cap {cap}")]
    BoundExceeded { size: u128, cap: u128 },

    #[error("parameter mismatch: (N={left_modulus}, k={left_level}) vs (N={right_modulus}, k={right_level})")]
    ParamsMismatch {
        left_modulus: u32,
        left_level: u32,
        right_modulus: u32,
        right_level: u32,
    },

    #[error("weight coefficients sum to {sum}, which exceeds level {level}")]
    LevelExceeded { sum: u64, level: u32 },

    #[error("argument {value} exceeds level {level}")]
    RangeError { value: u32, level: u32 },

    #[error(
        "Verlinde sum {re:+.3e}{im:+.3e}i is not within {tolerance:e} of a nonnegative integer"
    )]
    NumericalDrift { re: f64, im: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
