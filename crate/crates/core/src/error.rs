use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range 1..={arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("the unit term has no smallest variable")]
    UnitTerm,
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("duplicate term {0}")]
    DuplicateTerm(String),
    #[error("not an order ideal: {term} is present but its divisor {missing} is not")]
    NotOrderIdeal { term: String, missing: String },
    #[error("malformed bar code: {0}")]
    MalformedBarCode(String),
    #[error("bar code is not admissible")]
    NotAdmissible,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("term {0} is not in the set")]
    TermNotInSet(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("ragged array: {0}")]
    Ragged(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NonSquare { rows: usize, row: usize, cols: usize },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("bar list {0} is outside the admissible range")]
    BarListOutOfRange(String),
    #[error("source is not {0}")]
    NotStable(&'static str),
    #[error("enumeration cap exceeded: p={p} is above the cap {cap} for n={n}")]
    CapExceeded { n: usize, p: u64, cap: u64 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
