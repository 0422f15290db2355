use thiserror::Error;

/// Every failure the engines can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value table has {len} entries but period is {period}")]
    LengthMismatch { period: usize, len: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series division by zero")]
    DivisionByZeroSeries,
    #[error("valuation of dividend ({num}) is below valuation of divisor ({den})")]
    Valuation { num: usize, den: usize },
    #[error("prime {p} divides a denominator; value has no reduction mod {p}")]
    BadPrime { p: u64 },
    #[error("polynomial of degree {degree} exceeds table degree {max_degree}")]
    DegreeOverflow { degree: usize, max_degree: usize },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series does not converge: {0}")]
    Convergence(String),
    #[error("term budget of {max_terms} exhausted before reaching tolerance")]
    BudgetExceeded { max_terms: u64 },
    #[error("root finding failed: {0}")]
    RootFinding(String),
}

/// Coarse classes used for process exit codes and C status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Domain,
    Budget,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) | Error::LengthMismatch { .. } => ErrorClass::Parse,
            Error::BudgetExceeded { .. } => ErrorClass::Budget,
            _ => ErrorClass::Domain,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::Domain(_) => "domain",
            Error::DivisionByZeroSeries => "division_by_zero_series",
            Error::Valuation { .. } => "valuation",
            Error::BadPrime { .. } => "bad_prime",
            Error::DegreeOverflow { .. } => "degree_overflow",
            Error::InvalidPolynomial(_) => "invalid_polynomial",
            Error::Pole(_) => "pole",
            Error::Convergence(_) => "convergence",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::RootFinding(_) => "root_finding",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
