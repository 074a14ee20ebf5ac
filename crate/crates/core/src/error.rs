use thiserror::Error;

use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{0}`: parts must be weakly decreasing non-negative integers")]
    InvalidPartition(String),

    #[error("invalid skew shape `{0}`")]
    InvalidSkewShape(String),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("reverse reading word is not a lattice permutation")]
    NotLattice,

    #[error("cell ({}, {}) is not a legal slide position", .0.row, .0.col)]
    IllegalSlide(Cell),

    #[error("character sum for g{0} is not an integer")]
    NonIntegral(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("malformed parameters: {0}")]
    MalformedParams(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
