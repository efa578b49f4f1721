use thiserror::Error;

/// Errors raised by the core model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Chain or mode configuration violates an invariant (N < 3, non-finite field, k out of range).
    #[error("invalid chain parameters: {0}")]
    InvalidParams(String),

    /// A Bloch correlation triple breaks density-matrix positivity.
    #[error("invalid two-qubit state: {0}")]
    InvalidState(String),

    /// Scalar argument outside the mathematical domain of an entropy function.
    #[error("argument outside domain: {0}")]
    Domain(String),

    /// A matrix handed to the generic pipeline is not a density matrix
    /// (non-Hermitian, trace != 1, or negative spectrum beyond tolerance).
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    /// The assembled uncertainty report violates lhs >= Adabi bound; signals
    /// an implementation bug, never a physical regime.
    #[error("uncertainty ordering violated: {0}")]
    OrderingViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
