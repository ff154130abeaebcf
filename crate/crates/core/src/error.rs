use thiserror::Error;

use crate::diagram::Cell;
use crate::lie::Family;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("orbit is a point: every coroot pairing vanishes")]
    PointOrbit,

    #[error("operation is not defined for the {0} family")]
    WrongFamily(Family),

    #[error("weight is not regular: coroot pairing {0} vanishes")]
    NotRegular(String),

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: i64, max: i64 },

    #[error("box {0} is not in the diagram")]
    UnknownBox(Cell),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("constant Gelfand-Tsetlin function {label} evaluated to {got}, expected {expected}")]
    ConstantMismatch {
        label: String,
        expected: f64,
        got: f64,
    },

    #[error("sample point left the open domain: {0}")]
    DomainViolation(String),

    #[error("edge matrix is not unimodular: det = {0}")]
    UnimodularityFailure(String),

    #[error("simplex vertex {index} lies outside the polytope")]
    ContainmentFailure { index: usize },

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors that can only come from a construction bug, never from user input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::UnimodularityFailure(_)
                | Error::ContainmentFailure { .. }
                | Error::Infeasible
                | Error::Internal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
