use std::fmt;

use thiserror::Error;

/// A full row or column of a matrix, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is empty or not square")]
    NotSquare,
    #[error("entry {value} at ({i},{j}) is not in {{-1,0,1}}")]
    EntryOutOfRange { i: usize, j: usize, value: i64 },
    #[error("{line} has a partial sum {sum} outside {{0,1}} ending at ({i},{j})")]
    BadPartialSum {
        i: usize,
        j: usize,
        line: Line,
        sum: i64,
    },
    #[error("{line} sums to {sum}, expected 1")]
    BadTotalSum { line: Line, sum: i64 },
    #[error("matrix has {minus} entries equal to -1 and is not a permutation matrix")]
    NotAPermutation { minus: usize },
    #[error("not a permutation of 1..{n}: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },
    #[error("invalid corner sum matrix: {0}")]
    InvalidCornerSums(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("the pair is not a covering relation")]
    NotACover,
    #[error("blocks do not differ by the exchange pattern [[-1,1],[1,-1]]")]
    NotAnExchangeBlock,
    #[error("position ({p},{q}) is outside a {n}x{n} matrix")]
    IndexOutOfRange { p: usize, q: usize, n: usize },
    #[error("size {n} has {count} matrices, above the enumeration guard {guard}")]
    TooLarge { n: usize, count: String, guard: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
