use thiserror::Error;

/// Everything that can go wrong inside the engine.
///
/// The variants are shared across modules so that a CLI front end can map
/// them onto exit codes with a single `match`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound of {max}", max = crate::fields::MAX_PRIME)]
    UnsupportedPrime(u64),

    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("irreducibility search needs {needed} candidates, budget is {budget}")]
    DegreeTooLarge { needed: u128, budget: u64 },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial matrix has zero determinant")]
    SingularInput,
    #[error("linear system has no solution")]
    Inconsistent,

    #[error("partition {0} is not in the image of zeta_{1}")]
    NotInImage(String, usize),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is not primary for {f}: {reason}")]
    NotPrimary { f: String, reason: String },
    #[error("deg f = {degf} does not divide the dimension {dim}")]
    DimensionMismatch { degf: usize, dim: usize },
    #[error("no Jordan-Chevalley decomposition of type {0}")]
    NoSuchType(String),
    #[error("rank {rank} of n^{power} is not divisible by deg f = {degf}")]
    NotDivisible {
        rank: usize,
        power: usize,
        degf: usize,
    },
    #[error("no invertible commutant element found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        found: usize,
        expected: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
