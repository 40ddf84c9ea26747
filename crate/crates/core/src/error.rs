use thiserror::Error;

use crate::dyck::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal step character {ch:?} at position {pos}")]
    IllegalStep { ch: char, pos: usize },

    #[error("path drops below the diagonal after step {pos}")]
    BelowDiagonal { pos: usize },

    #[error("unbalanced path: {north} north steps, {east} east steps")]
    Unbalanced { north: usize, east: usize },

    #[error("word has length {found}, path has semilength {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("word letters must be positive, found 0 at position {pos}")]
    ZeroLetter { pos: usize },

    #[error("cell ({}, {}) is not a corner of the path", .0.x, .0.y)]
    NotACorner(Cell),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("box ({row}, {col}) lies outside the partition")]
    BoxOutside { row: usize, col: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    #[error("column word {entries:?} is not {mode}")]
    ColumnWordMode {
        entries: Vec<u32>,
        mode: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
