use thiserror::Error;

use crate::root_system::Letter;

/// Everything that can go wrong while building root data, enumerating
/// ideals, or evaluating a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {letter}: {requirement}")]
    InvalidRank {
        letter: Letter,
        rank: usize,
        requirement: &'static str,
    },

    #[error("unknown Lie type letter {0:?}")]
    UnknownLetter(String),

    #[error("{letter}{rank} has {roots} positive roots; at most {capacity} are supported")]
    CapacityExceeded {
        letter: Letter,
        rank: usize,
        roots: usize,
        capacity: usize,
    },

    /// A derived invariant of a root system disagreed with its independent
    /// computation. Always a generation bug.
    #[error("root system invariant violated for {system}: {detail}")]
    InvariantViolation { system: String, detail: String },

    #[error("{formula}: division of {numerator} by {denominator} is not exact")]
    InexactDivision {
        formula: &'static str,
        numerator: String,
        denominator: String,
    },

    #[error("{formula}: intermediate value does not fit the chosen integer type")]
    Overflow { formula: &'static str },

    #[error("{formula}: result would be negative")]
    Negative { formula: &'static str },

    #[error("{what} = {value} is outside the admissible range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("roots {0} and {1} are comparable, so the set is not an antichain")]
    NotAnAntichain(usize, usize),

    #[error("root set is not upward-closed: {0}")]
    NotUpwardClosed(String),

    #[error("{operation} is not available for type {letter}")]
    Unsupported {
        letter: Letter,
        operation: &'static str,
    },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
