use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// Basis indices are 1-based, matching the file format.
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("algebra is not soluble")]
    NotSoluble,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subalgebra is not maximal")]
    NotMaximal,
    #[error("subspaces are not nested")]
    NotNested,
    #[error("the zero algebra has no minimal ideal")]
    ZeroAlgebra,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid module: representation identity fails for basis pair ({0}, {1})")]
    InvalidModule(usize, usize),
    #[error("matrix is not a derivation: Leibniz rule fails on basis pair ({0}, {1})")]
    NotADerivation(usize, usize),
    #[error("Definition criteria disagree for maximal subalgebra {subalgebra}: core says {core_normal}, complement says {complement_normal}")]
    CriteriaDisagree {
        subalgebra: String,
        core_normal: bool,
        complement_normal: bool,
    },
    #[error("algebra is outside the formation but has no critical maximal subalgebra")]
    NoCriticalDescent,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("unknown formation {0:?}")]
    UnknownFormation(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
