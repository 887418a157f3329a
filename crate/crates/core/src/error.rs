use thiserror::Error;

/// Errors raised by the exact algebra and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported algebraic degree: {0}")]
    UnsupportedAlgebraicDegree(String),
    #[error("unsupported pole field: {0}")]
    UnsupportedPoleField(String),
    #[error("pole order {0} is odd")]
    OddOrder(i64),
    #[error("pole order {0} is outside the supported range")]
    InvalidOrder(i64),
    #[error("leading Laurent coefficient {0} has no exact square root")]
    NonSquareLeading(String),
    #[error("polynomial degree {0} is odd")]
    OddDegree(usize),
    #[error("exponents {0} and {1} are not commensurate")]
    NonCommensurateFrequencies(String, String),
    #[error("substitution does not produce a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("genericity violation: {0}")]
    GenericityViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Stable machine-readable tag used in JSON output.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::UnsupportedAlgebraicDegree(_) => "UnsupportedAlgebraicDegree",
            Error::UnsupportedPoleField(_) => "UnsupportedPoleField",
            Error::OddOrder(_) => "OddOrder",
            Error::InvalidOrder(_) => "InvalidOrder",
            Error::NonSquareLeading(_) => "NonSquareLeading",
            Error::OddDegree(_) => "OddDegree",
            Error::NonCommensurateFrequencies(..) => "NonCommensurateFrequencies",
            Error::NotLaurent(_) => "NotLaurent",
            Error::GenericityViolation(_) => "GenericityViolation",
            Error::Precondition(_) => "Precondition",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
