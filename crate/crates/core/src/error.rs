use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numeric domain error: {0}")]
    NumericDomain(String),

    #[error("degenerate form: {0}")]
    DegenerateForm(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of a negative number")]
    NegativeSqrt,

    #[error("unknown simplex `{symbol}` (valid symbols: {valid})")]
    NotFound { symbol: String, valid: String },

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("lengths do not embed in euclidean space (discriminant {0:e})")]
    NonEmbeddable(f64),

    #[error("inadmissible configuration: {}", .0.join("; "))]
    Inadmissible(Vec<String>),

    #[error("fixpoint iteration did not converge after {0} passes")]
    Convergence(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
