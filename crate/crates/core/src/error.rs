use thiserror::Error;

use crate::lattice::Point;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("dimension must be between 1 and 31, got {0}")]
    BadDimension(usize),
    #[error("point {point} has dimension {got}, expected {expected}")]
    PointDimension { point: Point, got: usize, expected: usize },
    #[error("conductor {0} has a negative coordinate")]
    NegativeConductor(Point),
    #[error("small element {0} lies outside the box [0, c]")]
    OutOfBox(Point),
    #[error("the zero vector is not among the small elements")]
    MissingZero,
    #[error("the conductor {0} is not among the small elements")]
    MissingConductor(Point),
    #[error("no element with all coordinates positive")]
    NoMultiplicity,
    #[error("generators must be positive and have gcd 1")]
    BadGenerators,
    #[error("projection axes must be a nonempty proper subset")]
    BadAxes,
    #[error("point {0} is not an element")]
    NotMember(Point),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("shift {0} is not an element of the semigroup")]
    NotInSemigroup(Point),
    #[error("shift {0} is not positive in every coordinate")]
    NotPositive(Point),
    #[error("the shift must be nonzero")]
    ZeroShift,
    #[error("the set is not a good ideal: {0}")]
    NotGoodIdeal(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LevelError {
    #[error("partition step removed nothing; the set is not admissible")]
    Stuck,
    #[error("level count {got} differs from expected {expected}")]
    LevelCount { got: usize, expected: usize },
    #[error("point {0} is not an element of the semigroup")]
    NotInSemigroup(Point),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PreconditionError {
    #[error("precondition violated: {0}")]
    Violated(String),
    #[error(transparent)]
    Level(#[from] LevelError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("{path}: {source}")]
    Semigroup { path: String, source: SemigroupError },
}
