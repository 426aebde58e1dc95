use thiserror::Error;

/// Errors raised by every evaluation route.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("power series inversion needs a nonzero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial has degree 0; at least one zero is required")]
    ZeroDegree,
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("P and Q share a zero; the entries 1/(x_i - y_j) are undefined")]
    SharedRoot,
    #[error("root finder did not converge within {iterations} iterations")]
    DidNotConverge { iterations: usize },
    #[error("entry ({row}, {col}) is singular: x_i and y_j coincide")]
    SingularEntry { row: usize, col: usize },
    #[error("x-roots {i} and {j} coincide")]
    RepeatedXRoot { i: usize, j: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{id}: outside the domain ({reason})")]
    OutOfDomain { id: String, reason: String },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
