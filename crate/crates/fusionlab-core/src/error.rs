//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("images of length {len} do not form a permutation: point {point} appears more than once")]
    NotABijection { len: usize, point: u32 },

    #[error("image {value} out of range for degree {degree}")]
    PointOutOfRange { degree: usize, value: u32 },

    #[error("group order exceeds the safety cap of {cap}")]
    OrderCapExceeded { cap: u128 },

    #[error("enumeration of {order} elements exceeds the cap of {cap}")]
    EnumerationCapExceeded { order: u128, cap: usize },

    #[error("class count {count} exceeds the cap of {cap}")]
    ClassCapExceeded { count: usize, cap: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("subgroup is not normal, but a true quotient was requested")]
    NotNormal,

    #[error("group of order {order} is not a {p}-group")]
    NotAPGroup { p: u32, order: u128 },

    #[error("element of order {order} is not a {p}-element")]
    NotAPElement { p: u32, order: u64 },

    #[error("subgroup of order {order} is not a Sylow {p}-subgroup (expected order {expected})")]
    NotSylow { p: u32, order: u128, expected: u128 },

    #[error("nilpotency computation exceeded {cap} lower-central steps")]
    NilpotencyCapExceeded { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("coset enumeration exceeded the limit of {max_cosets} cosets; result inconclusive")]
    CosetLimitExceeded { max_cosets: usize },

    #[error("catalog entry `{name}`: computed order {computed} does not match expected order {expected}")]
    ExpectedOrderMismatch {
        name: String,
        computed: u128,
        expected: u128,
    },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal cross-check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
