use thiserror::Error;

use crate::qpoly::QPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimensions must be positive, got ({m}, {n})")]
    DegenerateDims { m: u32, n: u32 },

    #[error("({m}, {n}) is not a coprime pair")]
    NonCoprime { m: u32, n: u32 },

    #[error("invalid step {0:?}: paths are strings over 'N' and 'E'")]
    InvalidStep(char),

    #[error("a path in the {m}x{n} rectangle needs {n} N steps and {m} E steps, found {found_n} N and {found_e} E")]
    StepCount {
        m: u32,
        n: u32,
        found_n: usize,
        found_e: usize,
    },

    #[error("path has dimensions {found:?}, expected {expected:?}")]
    DimsMismatch {
        expected: (u32, u32),
        found: (u32, u32),
    },

    #[error("not a Dyck path")]
    NotDyck,

    #[error("not a self-rank-complement Dyck path")]
    NotSelfComplement,

    #[error("invalid rank set: {0}")]
    InvalidRankSet(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid hook set: {0}")]
    InvalidHookSet(String),

    #[error("cell ({row}, {col}) is not in the diagram")]
    CellOutOfShape { row: usize, col: usize },

    #[error("first-column hook set is not {n}-flush")]
    NotFlush { n: u32 },

    #[error("the empty partition has no first-column hook")]
    EmptyPartition,

    #[error("not a simultaneous core: hook length {hook} is divisible by {modulus}")]
    NotCore { modulus: u32, hook: u32 },

    #[error("q-binomial [{a} choose {b}] needs 0 <= b <= a")]
    InvalidBinomial { a: u32, b: u32 },

    #[error("polynomial division is not exact, remainder {remainder}")]
    InexactDivision { remainder: QPoly },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("enumeration exceeds the limit of {limit} objects")]
    LimitExceeded { limit: u64 },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}
