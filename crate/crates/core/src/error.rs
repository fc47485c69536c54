use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("invalid family spec `{0}`")]
    FamilySpec(String),
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("series not invertible")]
    NotInvertible,
    #[error("sequence capacity must be at least 1")]
    ZeroCapacity,
    #[error("inadmissible sequence at n={0}")]
    Inadmissible(usize),
    #[error("index {index} beyond custom table of length {len}")]
    BeyondTable { index: usize, len: usize },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialParts { n: usize, sum: usize },
    #[error("falling factorial index out of range")]
    FallingFactorialRange,
    #[error("empty scalar list")]
    EmptyScalars,
    #[error("operator and operand belong to different sequence families")]
    FamilyMismatch,
    #[error("operator series holds {len} coefficients but the operand needs {needed}")]
    OperatorTooShort { len: usize, needed: usize },
    #[error("Bernoulli table holds B_0..B_{max}, B_{requested} requested")]
    TableTooShort { max: usize, requested: usize },
    /// An exact identity that must hold by construction failed. Always a bug.
    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
}
