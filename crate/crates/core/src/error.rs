use thiserror::Error;

/// Errors raised by the field, counting and bound machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field too large: {0}")]
    TooLarge(String),
    #[error("invalid extension degree {0}")]
    InvalidDegree(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("modulus is not irreducible")]
    NotIrreducible,
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("character index {0} is trivial")]
    DegenerateCharacter(u64),
    #[error("polynomial degenerate for character sums: {0}")]
    DegeneratePolynomial(String),
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("wild ramification: p = {p} does not exceed d = {d}")]
    WildRamification { p: u64, d: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("coefficient b must be nonzero")]
    ZeroB,
    #[error("curve is singular (27 b^2 + 8 a^3 = 0)")]
    NotSmooth,
    #[error("Hasse bound violated: {0}")]
    HasseViolation(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("bad field size {0}")]
    BadField(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
