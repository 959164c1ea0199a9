use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of consecutive differentials is not zero: {0}")]
    CompositionNotZero(String),
    #[error("map does not respect cycles/boundaries: {0}")]
    NotAChainMapOnClasses(String),
    #[error("vector is not a cycle of the subquotient: {0}")]
    NotACycle(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("coalgebra `{0}` is not cocommutative")]
    NotCocommutative(String),
    #[error("algebra `{0}` is not commutative")]
    NotCommutative(String),
    #[error("`{0}` does not respect the involutions")]
    NotInvolutive(String),
    #[error("not a Lie measuring: {0}")]
    NotALieMeasuring(String),
    #[error("not a Leibniz algebra: {0}")]
    NotALeibnizAlgebra(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("relation not preserved: {0}")]
    RelationNotPreserved(String),
    #[error("{what} needs dimension {dim}, above the cap {cap}")]
    TruncationTooLarge { what: String, dim: usize, cap: usize },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
