use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    InvalidPartition(Vec<u64>),
    #[error("n must be at least {min} (got {got})")]
    NTooSmall { min: u64, got: u64 },
    #[error("partitions must partition the same integer: {0} vs {1}")]
    MismatchedN(u64, u64),
    #[error("set partitions must be over the same ground set: {0} vs {1}")]
    MismatchedGroundSet(usize, usize),
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("operation requires the {0} basis")]
    WrongBasis(&'static str),
    #[error("set partition has {blocks} blocks but only {n} labels are available")]
    TooManyBlocks { blocks: usize, n: u64 },
    #[error("size cap exceeded: {required} entries required, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("transition matrix cap exceeded: ground set {m} is larger than {cap}")]
    TransitionCap { m: usize, cap: usize },
    #[error("coordinate {value} out of range 1..={n}")]
    IndexOutOfRange { value: u64, n: u64 },
    #[error("map on [n] is not a bijection")]
    NotBijective,
    #[error("invalid layer spec: {0}")]
    SpecParse(String),
    #[error("invalid set partition: {0}")]
    InvalidBlocks(String),
    #[error("hook product does not divide n! for {0:?}")]
    HookDivision(Vec<u64>),
}

pub type Result<T> = std::result::Result<T, Error>;
