use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error(
        "candidate budget exceeded: the search needs {required} candidate checks but the \
         budget is {budget}; use sampling mode or raise the budget"
    )]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
