use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("grade overflow: {0} + {1} > 6")]
    GradeOverflow(usize, usize),
    #[error("expected grade {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("subspace is not isotropic: ω(b{0}, b{1}) ≠ 0")]
    NotIsotropic(usize, usize),
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("denominator divisible by prime {0}")]
    BadPrime(u64),
    #[error("gcd degree unstable: {0}")]
    Unstable(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("witness not unique: {0}")]
    NotUnique(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("table mismatch: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

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
