use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("unsupported field {field}: {reason}")]
    UnsupportedField { field: String, reason: String },

    #[error("{0} has no square root")]
    NoSquareRoot(String),

    #[error("zero has no valuation")]
    ZeroValuation,

    #[error("odd valuation {0}: not a square in the p-adic field")]
    OddValuation(i64),

    #[error("square class of zero is undefined")]
    UndefinedClass,

    #[error("degenerate line template: at least one slot must be a wildcard")]
    DegenerateLine,

    #[error("invalid template or cell: {0}")]
    InvalidTemplate(String),

    #[error("resource limit exceeded ({what}) at N = {reached}")]
    ResourceLimit { what: String, reached: usize },

    #[error("search space too large: {cells} cells exceeds cap {cap}")]
    SearchSpaceTooLarge { cells: u128, cap: u128 },

    #[error("field too small: no zero-sum-free sequence of length {n} found in {field}")]
    FieldTooSmall { field: String, n: usize },

    #[error("parameter {0} lies in the exclusion set")]
    ExcludedParameter(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("factorization limit: cofactor {cofactor} has no factor below {bound}")]
    FactorizationLimit { cofactor: String, bound: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for the errors a caller may cure by raising a budget.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit { .. }
                | Error::SearchSpaceTooLarge { .. }
                | Error::FactorizationLimit { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
