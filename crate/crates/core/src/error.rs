//! Shared error type for all operations in the crate.

use thiserror::Error;

/// Errors reported by the algebraic operations.
///
/// Every fallible operation in the crate returns this type so that callers
/// (CLI, bindings, tests) can map failures to exit codes uniformly.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A modulus was requested that is not a prime greater than 3.
    #[error("modulus {0} is not a prime greater than 3")]
    InvalidModulus(u64),

    /// Division by zero in a field.
    #[error("division by zero")]
    DivisionByZero,

    /// Two operands live over different coefficient fields.
    #[error("incompatible fields: {0} vs {1}")]
    IncompatibleFields(String, String),

    /// Two polynomials live in different rings (variables, grading, order
    /// or field differ).
    #[error("incompatible rings: {0} vs {1}")]
    IncompatibleRings(String, String),

    /// A matrix operation received dimensions that do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An operation that requires homogeneous input received an
    /// inhomogeneous polynomial.
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    /// An operation that requires a nonzero form received zero.
    #[error("form is identically zero")]
    ZeroForm,

    /// The ideal is the unit ideal, so the quotient ring is zero.
    #[error("quotient ring is zero (ideal contains a unit)")]
    ZeroRing,

    /// The coefficient field characteristic is too small for a
    /// characteristic-sensitive operation.
    #[error("characteristic {p} is too small (need 0 or > {need})")]
    CharacteristicTooSmall { p: u64, need: u64 },

    /// A Groebner or resolution computation exceeded its work budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Random sampling failed to produce enough independent data.
    #[error("degenerate sampling: {0}")]
    DegenerateSampling(String),

    /// Three quadrics that were required to form a complete intersection
    /// do not.
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),

    /// A requested degree or homological index lies outside the computed
    /// window.
    #[error("window exceeded: {0}")]
    WindowExceeded(String),

    /// Serialization or file I/O failed.
    #[error("io error: {0}")]
    Io(String),

    /// Generic invariant violation with context.
    #[error("{0}")]
    Invalid(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
