use thiserror::Error;

/// Errors raised by the algebra, matrix-group and K1 layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} tensor components")]
    DimensionMismatch { left: usize, right: usize },

    #[error("component index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("scalar must be nonzero")]
    ZeroScalar,

    #[error("component {component} carries a non-scalar factor")]
    NonScalarComponent { component: usize },

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("variable x{0} does not occur in this Laurent ring")]
    UnknownVariable(usize),

    #[error("element is not of the form 1 + p_n (component {component})")]
    NotInCongruenceForm { component: usize },

    #[error("element minus one lies in level {actual}, level {required} required")]
    NotInLevel { required: usize, actual: usize },

    #[error("element minus one is not in the congruence ideal p*p_n")]
    NotInCongruenceIdeal,

    #[error("inverse check failed: {0}")]
    InverseCheckFailed(String),

    #[error("structural anomaly: {0}")]
    StructuralAnomaly(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
