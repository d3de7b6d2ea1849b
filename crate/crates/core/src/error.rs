use thiserror::Error;

/// Errors raised by the arithmetic and analytic routines of this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("value out of representable range: {0}")]
    Range(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{0} is not coprime to the ramified prime")]
    NotCoprimeToRamified(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("mismatched fields: {0} and {1}")]
    FieldMismatch(String, String),

    #[error("cannot parse {0}")]
    Parse(String),

    #[error("i/o failure: {0}")]
    Io(String),

    #[error("degenerate design matrix in least-squares fit")]
    DegenerateFit,

    #[error("internal arithmetic failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
