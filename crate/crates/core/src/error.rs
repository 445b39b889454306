use std::path::PathBuf;

use thiserror::Error;

/// Errors from parsing strings, alphabets and serialized arrays.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols, at most 64 are supported")]
    AlphabetTooLarge(usize),
    #[error("alphabet lists {0:?} twice")]
    DuplicateSymbol(char),
    #[error("position {position}: symbol {symbol:?} is not in the alphabet")]
    UnknownSymbol { position: usize, symbol: char },
    #[error("position {position}: symbol index {index} is outside the alphabet")]
    SymbolOutOfRange { position: usize, index: usize },
    #[error("position {position}: {symbol:?} is not an IUPAC nucleotide code")]
    UnknownIupac { position: usize, symbol: char },
    #[error("position {position}: empty bracket group")]
    EmptyGroup { position: usize },
    #[error("position {position}: unbalanced bracket")]
    UnbalancedBracket { position: usize },
    #[error("position {position}: nested bracket")]
    NestedBracket { position: usize },
    #[error("line {line}: {message}")]
    Table { line: usize, message: String },
}

/// Errors from rendering tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("array {name:?} has {len} entries but the aligned layout has {columns} columns")]
    InconsistentLength { name: String, len: usize, columns: usize },
}

/// Malformed compressed prefix tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompressError {
    #[error("POS has {pos} entries but LEN has {len}")]
    LengthMismatch { pos: usize, len: usize },
    #[error("compressed table must start with POS = 1")]
    MissingFirst,
    #[error("POS[1] = 1 must carry LEN[1] = n")]
    BadFirstLength,
    #[error("POS is not strictly increasing at entry {0}")]
    NotIncreasing(usize),
    #[error("LEN is zero at entry {0}")]
    ZeroLength(usize),
    #[error("entry {0} runs past the end of the string")]
    OutOfBounds(usize),
}

/// Refusal to enumerate or sample more strings than the configured budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{requested} strings requested, budget is {limit}")]
pub struct BudgetExceeded {
    pub requested: u128,
    pub limit: u128,
}

/// Errors from the analysis harness.
#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}
