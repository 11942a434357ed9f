use thiserror::Error;

/// Errors raised by the algebra and homology routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is outside [0, {order})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} is not a two-sided identity")]
    BadIdentityHint(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("operation requires a monoid")]
    NotAMonoid,
    #[error("element {0} lies outside the group")]
    ElementOutsideGroup(usize),
    #[error("equation uses {vars} variables, cap is {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("malformed equation: {0}")]
    BadEquation(String),
    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("minimal ideal structure failed verification: {0}")]
    StructureVerificationFailed(String),
    #[error("vector does not lie in the lattice")]
    NotInLattice,
    #[error("matrices do not compose to zero")]
    NotAComplex,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCapExceeded(String),
    #[error("chain group of rank {rank} exceeds the cap of {cap}")]
    DimensionCapExceeded { rank: u128, cap: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
