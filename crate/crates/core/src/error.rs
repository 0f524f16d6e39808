//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised when constructing or re-interpreting a key array.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrayError {
    #[error("element at position {pos} is zero")]
    ZeroElement { pos: usize },
    #[error("element {value} at position {pos} is outside [-{n}, {n}]")]
    OutOfRange { pos: usize, value: i64, n: usize },
    #[error("length {len} exceeds the supported maximum of 2^62")]
    LengthOverflow { len: usize },
}

/// Errors raised by the in-place transformations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    /// Sign tagging needs the sign bit free; sign-tagged input requires the
    /// bit-tagged variant with an explicit scratch bitmap.
    #[error("input has negative elements; sign-tagged inversion needs a bit scratch")]
    NeedsBitTag,
    #[error("bit scratch is required for bit-tagged inversion")]
    MissingScratch,
    #[error("bit scratch has length {got}, array has length {want}")]
    ScratchLengthMismatch { got: usize, want: usize },
    #[error("bit scratch must be all-zero on entry")]
    ScratchNotZeroed,
    #[error("arrays have mismatched lengths {a} and {b}")]
    LengthMismatch { a: usize, b: usize },
}

/// Errors raised by the sorting pipelines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SortError {
    /// Keys must stay within [1, n]; sign tagging is unsound otherwise.
    #[error("key {value} at position {pos} is outside [1, {n}]")]
    KeyOutOfRange { pos: usize, value: i64, n: usize },
    #[error("auxiliary buffer has length {got}, keys have length {want}")]
    AuxLengthMismatch { got: usize, want: usize },
}

/// Errors raised by the combinatorial oracle.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree k={k} is outside [1, {n}]")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("n={n} exceeds the enumeration guard of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("arrays have mismatched lengths {a} and {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
