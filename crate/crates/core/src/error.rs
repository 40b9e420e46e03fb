use thiserror::Error;

use crate::degree::Degree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("theta is not a bijection: {0}")]
    NotBijective(String),

    #[error("{color} edge id {id} out of range (count {count})")]
    IdOutOfRange {
        color: &'static str,
        id: u32,
        count: usize,
    },

    #[error("pattern has degree {pattern} but the path has degree {path}")]
    PatternDegreeMismatch { pattern: Degree, path: Degree },

    #[error("bad segment range: need {p} <= {q} <= {d}")]
    BadRange { p: Degree, q: Degree, d: Degree },

    #[error("operands belong to different graphs")]
    SpecMismatch,

    #[error("size limit exceeded: {requested} exceeds cap {cap}")]
    SizeLimitExceeded { requested: String, cap: u64 },

    #[error("edge counts must be at least 2 of each colour (got {n1}, {n2})")]
    DegenerateCounts { n1: usize, n2: usize },

    #[error("exponents ({a}, {b}) do not satisfy N1^a = N2^b")]
    ExponentMismatch { a: u32, b: u32 },

    #[error("module vectors live at different levels {0} and {1}")]
    LevelMismatch(Degree, Degree),

    #[error("scale factor {0} is not the square of a rational")]
    IrrationalScale(String),

    #[error("{a} does not divide {b}")]
    NotDivisible { a: u64, b: u64 },

    #[error("function table has {got} entries, group has {expected} elements")]
    TableSizeMismatch { got: usize, expected: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
