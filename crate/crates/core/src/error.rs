use alloc::string::String;
use alloc::vec::Vec;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime greater than 3")]
    BadModulus(u64),
    #[error("modulus polynomial must be monic of degree at least 2")]
    NotMonic,
    #[error("modulus polynomial is reducible")]
    Reducible,
    #[error("extension degree {0} is not supported")]
    ExtensionDegree(usize),
    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },
    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },
    #[error("a coefficient denominator is divisible by {0}")]
    BadPrime(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error("Gröbner basis exceeded {limit} elements")]
    BasisCap { limit: usize },
    #[error("polynomial degree {degree} exceeds the cap of {limit}")]
    DegreeCap { degree: u32, limit: u32 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("trials must be at least 1")]
    Trials,
    #[error("quotient dimension {dim} exceeds the cap of {cap}")]
    QuotientCap { dim: usize, cap: usize },
    #[error("point does not lie on the cubic")]
    NotOnCubic,
    #[error("the gradient vanishes at the point")]
    SingularPoint,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("point is not an Eckardt point")]
    NotEckardt,
    #[error("cubic is singular modulo every tested prime (last: {0})")]
    Singular(u32),
    #[error("invalid cubic: {0}")]
    InvalidCubic(String),
    #[error("no consensus across primes {0:?}")]
    NoConsensus(Vec<u32>),
    #[error("family constraint violated: {0}")]
    FamilyConstraint(String),
    #[error("rejection budget of {0} attempts exhausted")]
    RejectionBudget(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
