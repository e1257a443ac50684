use thiserror::Error;

/// Errors raised by the algebra kernels and the module calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,
    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("p = {0} is out of range (need 2 <= p < 32768)")]
    CharacteristicOutOfRange(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("monomial length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("monomial ideal required")]
    MonomialIdealRequired,
    #[error("ideal must be proper and nonzero")]
    ProperNonzeroRequired,
    #[error("chain not ascending at index {0}")]
    ChainNotAscending(usize),
    #[error("not an R[x,f]-submodule: {0}")]
    NotSubmodule(String),
    #[error("not x-divisible")]
    NotXDivisible,
    #[error("not R-linear")]
    NotRLinear,
    #[error("candidate is not prime: {0}")]
    NonPrimeCandidate(String),
    #[error("not exactly divisible")]
    NotDivisible,
    #[error("instance rejected: {0}")]
    InstanceRejected(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
