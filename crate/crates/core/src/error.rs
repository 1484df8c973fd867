use thiserror::Error;

use crate::perm::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("invalid Thoma parameters: {0}")]
    InvalidThomaParams(String),

    #[error("level {requested} exceeds the available level {available}")]
    LevelTooLarge { requested: usize, available: usize },

    #[error("function is not hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("not positive definite: minimal eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("state is not normalized: f(e) = {value}")]
    NotNormalized { value: f64 },

    #[error("state is not faithful: smallest density eigenvalue {min_eigenvalue:e}")]
    NotFaithful { min_eigenvalue: f64 },

    #[error("parameter recovery failed: {0}")]
    Recovery(String),

    #[error("asymptotic values did not stabilize; trace {trace:?}")]
    NotStabilized { trace: Vec<(usize, f64)> },

    #[error("classification failed: {0}")]
    Classification(String),

    #[error("shift sequence start {m0} is below level {level} of the element")]
    ShiftStart { m0: usize, level: usize },

    #[error("irrep cache: {0}")]
    Cache(String),

    #[error("no irreducible representation {0} in the tables for this level")]
    UnknownPartition(Partition),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
