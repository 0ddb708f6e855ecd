use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised while parsing presentations, building groups and running
/// searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Syntax {
        line: usize,
        message: String,
    },
    GeneratorOutOfRange {
        line: usize,
        index: usize,
        gens: usize,
    },
    DuplicateKey {
        line: usize,
        key: String,
    },
    MissingRelativeOrder {
        generator: usize,
    },
    /// The presentation does not define a group of the expected order.
    Inconsistent {
        relation: String,
    },
    /// A multiplication table failed a group axiom.
    Axiom {
        message: String,
    },
    OrderCap {
        order: usize,
        cap: usize,
    },
    IndexOutOfRange {
        index: usize,
        order: usize,
    },
    EmptySet,
    NotSubgroup,
    NotNormal,
    TupleLength {
        expected: usize,
        found: usize,
    },
    Genus {
        b: usize,
    },
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { line, message } => write!(f, "line {line}: {message}"),
            Error::GeneratorOutOfRange { line, index, gens } => {
                write!(f, "line {line}: generator x{index} out of range 1..={gens}")
            }
            Error::DuplicateKey { line, key } => write!(f, "line {line}: duplicate {key}"),
            Error::MissingRelativeOrder { generator } => {
                write!(f, "missing relative order for generator x{generator}")
            }
            Error::Inconsistent { relation } => {
                write!(f, "inconsistent presentation: relation {relation} fails")
            }
            Error::Axiom { message } => write!(f, "group axiom violated: {message}"),
            Error::OrderCap { order, cap } => {
                write!(f, "group order {order} exceeds the configured cap {cap}")
            }
            Error::IndexOutOfRange { index, order } => {
                write!(
                    f,
                    "element index {index} out of range for a group of order {order}"
                )
            }
            Error::EmptySet => f.write_str("empty element set"),
            Error::NotSubgroup => f.write_str("element set is not a subgroup"),
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::TupleLength { expected, found } => {
                write!(f, "tuple has {found} entries, expected {expected}")
            }
            Error::Genus { b } => write!(f, "genus must be at least 2, got {b}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
