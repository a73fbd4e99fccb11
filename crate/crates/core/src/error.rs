use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    InvalidField(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("arrow ideal is not nilpotent modulo the relations within path length {0}")]
    NotNilpotent(usize),
    #[error("representation violates relation {0}")]
    RelationViolated(usize),
    #[error("blocks do not commute with arrow {0}")]
    NotAMorphism(String),
    #[error("not a short exact sequence: {0}")]
    NotExact(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconclusive at the cutoff: {0}")]
    Inconclusive(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
