use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable vector must have at least {min} entries, got {got}")]
    TooFewVariables { min: usize, got: usize },
    #[error("negative entry {0} in variable vector")]
    NegativeEntry(String),
    #[error("degree entry {0} must be at least 1")]
    ZeroDegree(usize),
    #[error("invalid complete intersection: {0}")]
    InvalidSpec(String),
    #[error("foliation degree must be at least 2, got {0}")]
    FoliationDegreeTooSmall(i64),
    #[error("{what} index {index} out of range 0..={max}")]
    OutOfRange {
        what: &'static str,
        index: i64,
        max: i64,
    },
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("non-integral Chern coefficient {0}")]
    NonIntegral(String),
    #[error("bound undefined: linear subspaces are excluded")]
    LinearSubspace,
    #[error("degree bound not applicable: dimension {0} is even")]
    EvenDimension(u32),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("zero vector field")]
    ZeroField,
    #[error("degree representation not reduced: top part is radial with g = 0")]
    NotReduced,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("not invariant (up to the ansatz degree) for generator {0}")]
    NotInvariant(usize),
    #[error("not a smooth point of the variety")]
    NotSmoothPoint,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
