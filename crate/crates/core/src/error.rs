use alloc::string::String;
use core::fmt;

use crate::polycore::Var;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different polynomial rings.
    AmbientMismatch,
    UnknownVariable(Var),
    DuplicateVariable(Var),
    /// A substitution did not cover every variable of the source ring.
    MissingSubstitution(Var),
    Parse { position: usize, message: String },
    /// Input polynomial is not of the shape an operation requires.
    WrongAmbient(String),
    DimensionMismatch { expected: usize, found: usize },
    /// Symmetric power (or similar) would exceed the configured dimension cap.
    CapExceeded { dim: usize, cap: usize },
    /// A structural identity that must hold exactly failed.
    IdentityFailure(String),
    /// `Ω(λ)` (or some `c_s`) vanished, so a division required by the construction is impossible.
    NotProper(String),
    InvalidArgument(String),
    NotStrictlyConvex,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AmbientMismatch => write!(f, "polynomials live in different rings"),
            Error::UnknownVariable(v) => write!(f, "unknown variable {v}"),
            Error::DuplicateVariable(v) => write!(f, "variable {v} declared twice"),
            Error::MissingSubstitution(v) => write!(f, "no substitution given for {v}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::WrongAmbient(msg) => write!(f, "wrong ambient ring: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::CapExceeded { dim, cap } => {
                write!(f, "refusing to build a module of dimension {dim} (cap is {cap})")
            }
            Error::IdentityFailure(msg) => write!(f, "identity failed: {msg}"),
            Error::NotProper(msg) => write!(f, "process is not proper: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NotStrictlyConvex => write!(f, "cone is not strictly convex"),
        }
    }
}

impl core::error::Error for Error {}
