//! Error type shared by the whole crate.

use std::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An exponent vector, point, or weight list has the wrong length.
    ArityMismatch { expected: usize, got: usize },
    /// Operands live in different variable contexts.
    ContextMismatch,
    /// Operands live over different coefficient fields.
    FieldMismatch,
    /// The requested prime-field modulus is not prime.
    NotPrime(u64),
    /// A coefficient is invalid for the field it is used in.
    InvalidScalar(String),
    /// Division by zero in the coefficient field.
    DivisionByZero,
    /// A variable name is empty, duplicated, or not an identifier.
    InvalidName(String),
    /// The operation requires a polynomial free of y-variables.
    NotXOnly,
    /// A variable index is outside the context.
    IndexOutOfRange { index: usize, arity: usize },
    /// Determinant of a non-square matrix.
    NonSquareMatrix { rows: usize, cols: usize },
    /// Matrix construction with inconsistent entry count or empty shape.
    BadMatrixShape(String),
    /// The input degree exceeds the requested slice degree.
    DegreeOutOfBounds { degree: i64, bound: usize },
    /// A polynomial system violates its construction invariants.
    InvalidSystem(String),
    /// A catalog system violates its invariants (leading monomials not
    /// pairwise coprime, or bad root data).
    InvalidCatalog(String),
    /// No unit root functional exists at any tried support degree.
    Infeasible {
        delta_f: usize,
        epsilon_first: usize,
        epsilon_last: usize,
    },
    /// The reduction did not reach a fixed point within the iteration cap.
    /// The answer is "undecided", never a wrong boolean.
    CapExceeded { iterations: usize },
    /// A telescoping decomposition was requested for a non-member.
    NotAMember,
    /// `star_func` needs an explicit output degree when the operand
    /// functionals carry no certificates.
    MissingDegreeBound,
    /// The engine configuration and the unit functional disagree on the
    /// divided-difference convention.
    ConventionMismatch,
    /// A claimed annihilation certificate failed re-verification.
    BadCertificate { degree: usize },
    /// Text input rejected at byte offset `pos`.
    Parse { pos: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected}, got {got}")
            }
            Error::ContextMismatch => write!(f, "operands have different variable contexts"),
            Error::FieldMismatch => write!(f, "operands have different coefficient fields"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidScalar(msg) => write!(f, "invalid coefficient: {msg}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidName(name) => write!(f, "invalid variable name `{name}`"),
            Error::NotXOnly => write!(f, "polynomial has y-variables where none are allowed"),
            Error::IndexOutOfRange { index, arity } => {
                write!(f, "variable index {index} out of range for {arity} variables")
            }
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "determinant of non-square {rows}x{cols} matrix")
            }
            Error::BadMatrixShape(msg) => write!(f, "bad matrix shape: {msg}"),
            Error::DegreeOutOfBounds { degree, bound } => {
                write!(f, "degree {degree} exceeds the slice degree {bound}")
            }
            Error::InvalidSystem(msg) => write!(f, "invalid polynomial system: {msg}"),
            Error::InvalidCatalog(msg) => write!(f, "invalid catalog system: {msg}"),
            Error::Infeasible {
                delta_f,
                epsilon_first,
                epsilon_last,
            } => write!(
                f,
                "no unit root functional with support degree up to {} (tried epsilon {}..={}); \
                 the system may not be zero-dimensional, or epsilon is too small",
                delta_f + epsilon_last,
                epsilon_first,
                epsilon_last
            ),
            Error::CapExceeded { iterations } => write!(
                f,
                "no fixed point within {iterations} iterations; result undecided"
            ),
            Error::NotAMember => write!(f, "polynomial is not a member of the ideal"),
            Error::MissingDegreeBound => write!(
                f,
                "output degree required: operand functionals carry no certificates"
            ),
            Error::ConventionMismatch => write!(
                f,
                "engine convention differs from the unit functional's convention"
            ),
            Error::BadCertificate { degree } => {
                write!(f, "certificate failed re-verification at degree {degree}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at offset {pos}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
