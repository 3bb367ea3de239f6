use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rank parameter violates the constraint of its family.
    #[error("invalid rank {param} for type {family}: {constraint}")]
    InvalidRank {
        family: char,
        param: usize,
        constraint: &'static str,
    },

    #[error("cannot parse system label {0:?}")]
    Parse(String),

    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i64>, String),

    #[error("modulus must be a positive integer, got {0}")]
    InvalidModulus(i64),

    #[error("the subsystem R({0}) is empty")]
    EmptySubsystem(usize),

    #[error("Weyl group of {system} has order {order}, above the budget {budget}; use the span criterion instead")]
    OrbitBudgetExceeded {
        system: String,
        order: u64,
        budget: u64,
    },

    #[error("unsupported position of the extra simple root: {0}")]
    UnsupportedPattern(String),

    #[error("no closed-form prediction for {0} with m={1}")]
    NoPrediction(String, usize),

    /// A mathematical invariant failed. Never expected to fire.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
