use thiserror::Error;

/// Errors raised when an operation cannot run on its input.
///
/// Findings such as axiom violations or Ingleton deficits are returned as
/// data; this type is reserved for malformed input and exceeded budgets.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("duplicate exponent vector {0:?}")]
    DuplicateExponent(Vec<u32>),

    #[error("polynomial has non-real coefficient at {0:?}")]
    NonRealCoefficient(Vec<u32>),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("ground set of size {0} exceeds the limit of 16")]
    GroundSetTooLarge(usize),

    #[error("subset mask {mask:#b} has bits outside a ground set of size {n}")]
    MaskOutOfRange { mask: u32, n: usize },

    #[error("matroid needs at least one basis")]
    EmptyBases,

    #[error("bases {0:?} and {1:?} have different cardinalities")]
    UnequalCardinality(Vec<usize>, Vec<usize>),

    #[error("exchange axiom fails for B1={b1:?}, B2={b2:?}, e={e}")]
    ExchangeFailure { b1: Vec<usize>, b2: Vec<usize>, e: usize },

    #[error("uniform matroid needs 0 < r <= n <= 16, got r={r}, n={n}")]
    UniformBounds { r: usize, n: usize },

    #[error("rank table for n={n} needs {expected} values, got {got}")]
    RankTableSize { n: usize, expected: usize, got: usize },

    #[error("full Ingleton scan on {n} elements exceeds the budget of {limit}")]
    ScanBudgetExceeded { n: usize, limit: usize },

    #[error("lattice point set is empty")]
    EmptyPointSet,

    #[error("polynomial vanishes at the chosen cone point e")]
    ZeroAtE,

    #[error("polynomial is not homogeneous (degrees {0} and {1} both occur)")]
    NotHomogeneous(u32, u32),

    #[error("matrix of size {size} exceeds the determinant budget of {limit}")]
    SizeBudgetExceeded { size: usize, limit: usize },

    #[error("matrix dimensions {rows}x{cols} do not fit: {context}")]
    Dimension { rows: usize, cols: usize, context: String },

    #[error("matrix is flagged hermitian but entry ({0},{1}) breaks conjugate symmetry")]
    NotHermitian(usize, usize),

    #[error("pencil is not hermitian, so a real determinant cannot be demanded")]
    NonHermitianInput,

    #[error("matrix {index} is not positive semidefinite: {reason}")]
    PsdCertificate { index: usize, reason: String },

    #[error("rank identity broken: elimination rank {elimination}, degree rank {degree}")]
    RankDegreeMismatch { elimination: usize, degree: usize },

    #[error("Cauchy-Binet needs rows <= cols, got {rows}x{cols}")]
    TooManyRows { rows: usize, cols: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
