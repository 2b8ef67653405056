use thiserror::Error;

/// Errors raised by the exact algebra, orbit and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not trace-zero (trace = {0})")]
    NotTraceZero(String),

    #[error("matrix does not have determinant one (det = {0})")]
    NotUnimodular(String),

    #[error("matrix is not diagonal")]
    NotDiagonal,

    #[error("matrix is not nilpotent within {steps} powers")]
    NotNilpotent { steps: usize },

    /// `repeated` lists (0-based) index pairs with equal eigenvalues of H.
    #[error("H is not regular: repeated eigenvalues at index pairs {repeated:?}")]
    NotRegular { repeated: Vec<(usize, usize)> },

    #[error("element has entries outside the {sign} nilradical at {positions:?}")]
    OutsideNilradical {
        sign: &'static str,
        positions: Vec<(usize, usize)>,
    },

    #[error("covector does not pair to one with the vector (pairing = {0})")]
    PairingNotOne(String),

    #[error("rational potential is undefined: trace vanishes (point lies on the incidence locus)")]
    Indeterminate,

    #[error("zero vector or covector")]
    ZeroVector,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("the operation requires the minimal orbit diag(n,-1,...,-1)")]
    NotMinimalOrbit,

    #[error("resource cap exceeded after {0} pair reductions")]
    ResourceCap(usize),

    #[error("variable sets differ: {0}")]
    VariableMismatch(String),

    #[error("substitution leaves variable `{0}` unassigned")]
    UnassignedVariable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
