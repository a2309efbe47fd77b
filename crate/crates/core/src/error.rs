use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("operands live in different coefficient domains")]
    DomainMismatch,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("expected a monic polynomial of degree at least 1, got {0}")]
    NotMonic(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix dimensions must be positive")]
    EmptyMatrix,

    #[error("matrix is singular (determinant {det})")]
    Singular { det: String },

    #[error("minor order {k} out of range for a {rows}x{cols} matrix")]
    MinorOutOfRange { k: usize, rows: usize, cols: usize },

    #[error("matrix size {size} exceeds the minor-enumeration cap {cap}")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("sequence is not a divisibility chain at position {0}")]
    NotADivisibilityChain(usize),

    #[error("{0} is not a root of the characteristic polynomial")]
    NotARoot(String),

    #[error("characteristic polynomial does not split over the base field; irreducible factors: {}", .factors.join(", "))]
    SplitFieldRequired { factors: Vec<String> },

    #[error("elementary divisor {0} is not a power of a linear factor")]
    NonlinearFactor(String),

    #[error("singular pencil (generic rank {rank} < {size}): canonical minimal-index theory out of scope")]
    SingularPencil { rank: usize, size: usize },

    #[error("elementary divisor degrees sum to {got}, expected {expected}")]
    InconsistentDegree { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("mass matrix is not positive definite (leading minor {index} = {value})")]
    NotPositiveDefinite { index: usize, value: String },

    #[error("interval bounds out of order")]
    EmptyInterval,
}
