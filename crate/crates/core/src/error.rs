use thiserror::Error;

#[derive(Debug, Error)]
pub enum KnotError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid diagram: {0}")]
    Validation(String),

    #[error("diagram has more than one link component")]
    MultiComponent,

    #[error("crossing index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("edge label {label} not present in diagram")]
    InvalidEdge { label: usize },

    #[error("crossing count {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("move is stale: {0}")]
    StaleMove(String),

    #[error("crossing budget exceeded: {n} > {cap}")]
    CrossingBudget { n: usize, cap: usize },

    #[error("degenerate Wirtinger presentation: {0}")]
    DegeneratePresentation(String),

    #[error("braid word is not an identity: {0}")]
    NotIdentityWord(String),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("estimated work {estimate} exceeds cap {cap}")]
    WorkCapExceeded { estimate: u64, cap: u64 },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, KnotError>;
