use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("expected {expected} coefficients, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("polynomial modulus {actual} does not match {expected}")]
    ModulusMismatch { expected: usize, actual: usize },
    #[error("cannot parse group name {0:?}")]
    BadGroupName(String),

    #[error("cannot factor zero")]
    ZeroInput,
    #[error("{0} exceeds the factorization bound")]
    TooLarge(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no solution found for {form} at target {target}")]
    NoSolution { form: &'static str, target: String },

    #[error("membership of {0} needs a factorization beyond the configured bound")]
    UndecidableAtScale(String),
    #[error("{value} is not in S({group})")]
    NotInSet { group: String, value: String },
    #[error("no construction route for {value} in S({group}) (branch {branch})")]
    ConstructionGap {
        group: String,
        value: String,
        branch: String,
    },
    #[error("enumeration of {0} vectors exceeds the budget")]
    BudgetExceeded(String),
    #[error("enumeration inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
