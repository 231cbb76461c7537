use thiserror::Error;

use crate::demazure::CompatibilityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("ray set {0:?} is not a face of the cone")]
    NotAFace(Vec<usize>),

    #[error("face with rays {0:?} is not regular")]
    NonRegularFace(Vec<usize>),

    #[error("vector is not in the integer span of the given basis")]
    NotInSublattice,

    #[error("vector {0} is not in the semigroup of the dual cone")]
    NotInSemigroup(String),

    #[error("character {0} is not regular on the chart of the point's orbit")]
    OutOfChart(String),

    #[error("root pairs are not compatible with the face: {0}")]
    IncompatibleRoots(Box<CompatibilityReport>),

    #[error("invalid root difference: {0}")]
    InvalidDifference(String),

    #[error("vector {0} is not primitive")]
    NotPrimitive(String),

    #[error("vector {0} is not a Demazure root of the cone")]
    NotARoot(String),

    #[error("point is not invertible")]
    NotInvertible,

    #[error("zero parameter where a nonzero value is required: {0}")]
    ZeroValue(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("Hilbert basis fallback cannot certify: {0}")]
    HilbertBoxOverflow(String),

    #[error("the idempotent locus of the orbit is empty")]
    EmptyLocus,

    #[error("orbit does not have the exactly-one root pattern: {0}")]
    PatternViolated(String),

    #[error("degree bound {bound} is below the largest generator degree {required}")]
    DegreeBoundTooSmall { bound: i64, required: i64 },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid preset parameters: {0}")]
    InvalidPreset(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}
