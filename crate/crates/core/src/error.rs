use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not fit together.
    Dimension(String),
    /// Input outside the domain of a construction.
    Domain(String),
    /// Evaluation hit a pole that does not cancel.
    Pole(String),
    /// Sample points coincide with poles of the series under test.
    PoleCollision(String),
    /// Linear system for interpolation has no unique solution.
    Singular(String),
    /// A vector expected to be an eigenvector is not one.
    NotEigen(String),
    /// Internal consistency check failed.
    Consistency(String),
    /// Two sides of an identity differ; `witness` names a differing term.
    Mismatch { check: String, witness: String },
    /// Requested tensor size exceeds the configured cap.
    SizeGuard { cells: u64, max: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(s) => write!(f, "dimension mismatch: {s}"),
            Error::Domain(s) => write!(f, "domain error: {s}"),
            Error::Pole(s) => write!(f, "pole: {s}"),
            Error::PoleCollision(s) => write!(f, "pole collision: {s}"),
            Error::Singular(s) => write!(f, "singular system: {s}"),
            Error::NotEigen(s) => write!(f, "not an eigenvector: {s}"),
            Error::Consistency(s) => write!(f, "consistency: {s}"),
            Error::Mismatch { check, witness } => write!(f, "{check}: mismatch at {witness}"),
            Error::SizeGuard { cells, max } => write!(f, "tensor size {cells} exceeds cap {max}"),
        }
    }
}

impl Error {
    pub fn mismatch(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Mismatch { check: check.into(), witness: witness.into() }
    }
}
