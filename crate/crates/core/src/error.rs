use thiserror::Error;

/// Errors produced by the cyclotope library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension t = {0} is too small (need t >= 3)")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} is out of range 1..={t}")]
    IndexOutOfRange { index: usize, t: usize },

    #[error("the ground subset is empty")]
    EmptySet,

    #[error("the ground subset must be a proper subset of 1..={0}")]
    NotProperSubset(usize),

    #[error("duplicate element {0} in ground subset")]
    DuplicateElement(usize),

    #[error("invalid sign character {0:?}, expected '+' or '-'")]
    InvalidSign(char),

    #[error("invalid sign value {0}, expected +1 or -1")]
    InvalidSignValue(i64),

    #[error("cannot parse ground subset {0:?}")]
    InvalidSubset(String),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("decomposition size {0} must be odd")]
    EvenSize(usize),

    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("t = {t} exceeds the enumeration cap {cap}; use the formula path")]
    CapExceeded { t: usize, cap: usize },

    #[error("t = {t} exceeds the brute-force budget {cap}")]
    BudgetExceeded { t: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
