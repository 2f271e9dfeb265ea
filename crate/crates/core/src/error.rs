use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Numerical,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need {needed} arguments, got {got}")]
    InsufficientArguments { needed: usize, got: usize },
    #[error("term with exponent {exp} has nonzero coefficient; tail integral diverges")]
    NonIntegrableTerm { exp: usize },
    #[error("evaluation point must be nonzero")]
    ZeroPoint,
    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must differ (j = l = {0})")]
    EqualIndices(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("argument {arg} outside the admissible sector ({lo}, {hi})")]
    SectorViolation { arg: f64, lo: f64, hi: f64 },
    #[error("truncation exhausted at order {order}: trusted up to exponent {valid_to}")]
    TruncationExhausted { order: usize, valid_to: usize },
    #[error("series depth {available} too small, need {needed}")]
    SeriesDepth { needed: usize, available: usize },
    #[error("coefficients vanish identically")]
    Degenerate,
    #[error("order {requested} exceeds available order {available}")]
    OrderOverflow { requested: usize, available: usize },
    #[error("Padé pole at {re}{im:+}i lies on the integration path")]
    PoleOnAxis { re: f64, im: f64 },
    #[error("singular linear system while building the Padé approximant")]
    SingularPade,
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::PoleOnAxis { .. }
            | Error::SingularPade
            | Error::NonConvergence(_)
            | Error::TruncationExhausted { .. }
            | Error::SeriesDepth { .. }
            | Error::Degenerate => ErrorKind::Numerical,
            _ => ErrorKind::Domain,
        }
    }
}
