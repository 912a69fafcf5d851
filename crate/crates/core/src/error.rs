//! Crate-wide error type.

use std::fmt;

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    DivisionByZeroPolynomial,
    /// gcd of two zero polynomials is undefined.
    BothZero,
    /// An operation requires a minimum degree the input does not have.
    /// `actual` is `None` for the zero polynomial.
    DegreeTooSmall { required: usize, actual: Option<usize> },
    /// Sturm machinery needs a nonconstant polynomial.
    ZeroOrConstantInput,
    /// A finite interval endpoint evaluates to zero, which Sturm counting
    /// does not allow.
    EndpointIsRoot { at: Rat },
    /// Criterion level index outside 1..=n-1.
    LevelOutOfRange { j: usize, max: usize },
    /// The two decision procedures returned different verdicts. This is an
    /// implementation bug, never a valid outcome.
    InternalDisagreement { criterion: bool, sturm: bool },
    /// The downward recurrence failed: a recurrence coefficient b_k was not
    /// positive (`b = Some(..)`) or a remainder had deficient degree
    /// (`b = None`). The input pair is not consecutive in any orthogonal
    /// sequence.
    NotInterlacing { level: usize, b: Option<Rat> },
    /// Recurrence coefficients with some b_k <= 0 cannot produce a Jacobi
    /// matrix or a positive measure.
    FavardViolated,
    /// The top polynomial does not have the full count of distinct real
    /// zeros required to support a discrete measure.
    NotRealRooted,
    /// Sequence and measure sizes do not match.
    DimensionMismatch { expected: usize, actual: usize },
    /// A documented precondition was violated.
    PreconditionViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroPolynomial => write!(f, "division by the zero polynomial"),
            Error::BothZero => write!(f, "gcd(0, 0) is undefined"),
            Error::DegreeTooSmall { required, actual } => match actual {
                Some(d) => write!(f, "degree must be at least {required} (got {d})"),
                None => write!(f, "degree must be at least {required} (got the zero polynomial)"),
            },
            Error::ZeroOrConstantInput => write!(f, "input must have degree at least 1"),
            Error::EndpointIsRoot { at } => write!(f, "interval endpoint {at} is a root"),
            Error::LevelOutOfRange { j, max } => {
                write!(f, "level j = {j} out of range (valid: 1..={max})")
            }
            Error::InternalDisagreement { criterion, sturm } => write!(
                f,
                "internal disagreement: criterion says {criterion}, sturm oracle says {sturm} (implementation bug)"
            ),
            Error::NotInterlacing { level, b } => match b {
                Some(b) => write!(f, "not interlacing: b_{level} = {b} <= 0"),
                None => write!(f, "not interlacing: remainder at level {level} has deficient degree"),
            },
            Error::FavardViolated => write!(f, "recurrence coefficients violate b_k > 0"),
            Error::NotRealRooted => {
                write!(f, "polynomial does not have all zeros real and distinct")
            }
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
