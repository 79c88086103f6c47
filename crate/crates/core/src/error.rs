use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau is not admissible")]
    NotAdmissible,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("coloring mismatch: {0}")]
    ColoringMismatch(String),
    #[error("shape {shape} is outside the bounding box of cycle type {alpha}")]
    OutsideBox { alpha: String, shape: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
