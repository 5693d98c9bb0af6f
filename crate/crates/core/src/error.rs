use alloc::string::String;
use core::fmt;

use crate::report::Report;

/// Structural errors: malformed input, mismatched endpoints, size guards.
///
/// Axiom and law failures are not errors; they are reported through
/// [`Report`]. The one exception is [`Error::Invalid`], raised by operations
/// whose precondition is a valid input and which refuse to run otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyCarrier,
    EmptyName {
        index: usize,
    },
    DuplicateName(String),
    UnknownElement(String),
    ElementOutOfRange {
        index: usize,
        len: usize,
    },
    ConflictingSum {
        a: String,
        b: String,
        existing: String,
        new: String,
    },
    ZeroSumContradiction {
        element: String,
        result: String,
    },
    MappingNotTotal {
        expected: usize,
        got: usize,
    },
    KindMismatch,
    EndpointMismatch,
    ValueOutOfRange {
        element: String,
        value: String,
    },
    SizeLimit {
        limit: usize,
        got: usize,
    },
    UnknownBuiltin(String),
    NotBounded,
    Invalid(Report),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCarrier => write!(f, "carrier is empty"),
            Error::EmptyName { index } => write!(f, "element {index} has an empty name"),
            Error::DuplicateName(name) => write!(f, "duplicate element name `{name}`"),
            Error::UnknownElement(name) => write!(f, "unknown element `{name}`"),
            Error::ElementOutOfRange { index, len } => {
                write!(
                    f,
                    "element index {index} out of range for carrier of size {len}"
                )
            }
            Error::ConflictingSum {
                a,
                b,
                existing,
                new,
            } => write!(
                f,
                "conflicting sums: {a} + {b} = {existing} and {a} + {b} = {new}"
            ),
            Error::ZeroSumContradiction { element, result } => write!(
                f,
                "zero sum contradiction: 0 + {element} must be {element}, not {result}"
            ),
            Error::MappingNotTotal { expected, got } => {
                write!(f, "mapping covers {got} of {expected} source elements")
            }
            Error::KindMismatch => write!(f, "effect algebra morphism between non-effect algebras"),
            Error::EndpointMismatch => write!(f, "morphism endpoints do not match"),
            Error::ValueOutOfRange { element, value } => {
                write!(f, "value {value} at `{element}` is outside [0,1]")
            }
            Error::SizeLimit { limit, got } => {
                write!(f, "size {got} exceeds the limit of {limit}")
            }
            Error::UnknownBuiltin(name) => write!(f, "unknown builtin algebra `{name}`"),
            Error::NotBounded => write!(f, "algebra has no greatest element"),
            Error::Invalid(report) => write!(f, "invalid input:\n{report}"),
        }
    }
}

impl core::error::Error for Error {}
