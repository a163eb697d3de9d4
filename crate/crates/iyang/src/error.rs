//! Crate-wide error type.

use thiserror::Error;

/// Every failure mode reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dynkin kind/rank pair outside ADE, or a malformed involution/orientation.
    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),
    /// `lambda - mu` is not a non-negative integral combination of simple coroots.
    #[error("lambda is not >= mu: {0}")]
    NotDominated(String),
    /// A supplied zeta violates its range or tau-compatibility.
    #[error("invalid zeta: {0}")]
    InvalidZeta(String),
    /// A quantity that must be integral came out fractional.
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    /// The polynomial passed to `f_minus` is not monic.
    #[error("polynomial is not monic in {0}")]
    NotMonic(String),
    /// Two interpolation nodes coincide.
    #[error("duplicate interpolation node: {0}")]
    DuplicateNode(String),
    /// Inversion of a rational function whose numerator does not split into linear forms.
    #[error("cannot invert: numerator {0} is not a product of linear forms")]
    NonLinearDenominator(String),
    /// Division by an exactly zero quantity.
    #[error("division by zero")]
    DivisionByZero,
    /// A shift-operator index outside the declared variable ranges.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// A generator symbol without an image in the assignment.
    #[error("missing symbol: {0}")]
    MissingSymbol(String),
    /// The shift coweight is not antidominant.
    #[error("shift coweight is not antidominant: {0}")]
    NotAntidominant(String),
    /// A parity or evenness hypothesis fails.
    #[error("parity violation: {0}")]
    ParityViolation(String),
    /// `mu != mu1 + tau(mu1)` or a degenerate grading.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    /// The triangular system for the Cartan series has no solution.
    #[error("non-solvable: {0}")]
    NonSolvable(String),
    /// No non-negative partition solves the coweight dictionary.
    #[error("inconsistent coweight data: {0}")]
    Inconsistent(String),
    /// A partition is longer than permitted.
    #[error("partition too long: {0}")]
    LengthViolation(String),
    /// A partition mixes odd and even parts where a single parity is required.
    #[error("mixed parity partition: {0}")]
    MixedParity(String),
    /// No epsilon-partition lies below the given partition.
    #[error("no epsilon-partition below {0}")]
    NoEpsilonPartitionBelow(String),
    /// A numerology identity failed.
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// Malformed or out-of-limits case descriptor.
    #[error("schema error: {0}")]
    Schema(String),
}

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
