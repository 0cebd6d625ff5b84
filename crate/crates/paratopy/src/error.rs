use core::fmt;

/// Errors reported by the library.
///
/// All coordinates carried by error variants are 1-based, matching the
/// textual conventions used everywhere outside the in-memory layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or permutation-carrying values) of different
    /// degrees were combined.
    DegreeMismatch { left: usize, right: usize },
    /// A sequence does not describe a bijection of {1..n}.
    InvalidPermutation,
    /// A grid is not n×n.
    NotSquare { rows: usize, cols: usize },
    /// A cell holds a value outside 1..n. Coordinates are 1-based.
    EntryOutOfRange { row: usize, col: usize },
    /// A row contains a repeated symbol. 1-based row index.
    RowDuplicate { row: usize },
    /// A column contains a repeated symbol. 1-based column index.
    ColumnDuplicate { col: usize },
    /// A row or column index is outside 1..n.
    IndexOutOfRange { index: usize, len: usize },
    /// An orthogonal array does not have 3 rows of n² entries.
    OaShape { expected: usize, got: usize },
    /// A component row of an orthogonal array holds a value outside 1..n.
    /// `row` is the component row (1..3), `col` the 1-based column.
    O1Violation { row: usize, col: usize },
    /// A value does not appear exactly n times in a component row.
    O2Violation { row: usize, value: usize },
    /// Two columns of an orthogonal array agree in more than one position.
    /// 1-based column indices of a witnessing pair.
    O3Violation { col1: usize, col2: usize },
    /// The operation needs a larger order (e.g. pair signatures need n ≥ 2).
    OrderTooSmall { order: usize, min: usize },
    /// Enumeration or classification was asked for an order outside its
    /// supported range (order 7 requires an explicit opt-in).
    OrderUnsupported { order: usize },
    /// Orders above 255 are not representable.
    OrderTooLarge { order: usize },
}

impl Error {
    /// Stable machine-readable code for this error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::InvalidPermutation => "invalid-permutation",
            Error::NotSquare { .. } => "not-square",
            Error::EntryOutOfRange { .. } => "entry-out-of-range",
            Error::RowDuplicate { .. } => "row-duplicate",
            Error::ColumnDuplicate { .. } => "column-duplicate",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::OaShape { .. } => "oa-shape",
            Error::O1Violation { .. } => "o1-violation",
            Error::O2Violation { .. } => "o2-violation",
            Error::O3Violation { .. } => "o3-violation",
            Error::OrderTooSmall { .. } => "order-too-small",
            Error::OrderUnsupported { .. } => "order-unsupported",
            Error::OrderTooLarge { .. } => "order-too-large",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::InvalidPermutation => {
                write!(f, "sequence is not a permutation of 1..n")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "grid is not square: {rows} rows, {cols} columns")
            }
            Error::EntryOutOfRange { row, col } => {
                write!(f, "entry at row {row}, column {col} is outside 1..n")
            }
            Error::RowDuplicate { row } => {
                write!(f, "row {row} repeats a symbol")
            }
            Error::ColumnDuplicate { col } => {
                write!(f, "column {col} repeats a symbol")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 1..{len}")
            }
            Error::OaShape { expected, got } => {
                write!(f, "orthogonal array needs {expected} columns, got {got}")
            }
            Error::O1Violation { row, col } => {
                write!(f, "O1 violated: component row {row}, column {col} outside 1..n")
            }
            Error::O2Violation { row, value } => {
                write!(f, "O2 violated: value {value} does not appear n times in component row {row}")
            }
            Error::O3Violation { col1, col2 } => {
                write!(f, "O3 violated: columns {col1} and {col2} agree in more than one position")
            }
            Error::OrderTooSmall { order, min } => {
                write!(f, "order {order} too small, need at least {min}")
            }
            Error::OrderUnsupported { order } => {
                write!(f, "order {order} not supported here (order 7 needs explicit opt-in, 8+ is out of range)")
            }
            Error::OrderTooLarge { order } => {
                write!(f, "order {order} exceeds the representable maximum 255")
            }
        }
    }
}

impl core::error::Error for Error {}
