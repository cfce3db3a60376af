use thiserror::Error;

/// Errors raised by the arithmetic kernel, the characterizations and the CLI layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series variables differ ({left} vs {right})")]
    VariableMismatch { left: char, right: char },

    #[error("exp needs a series with zero constant term")]
    NonzeroConstantTerm,

    #[error("e_{m} requested from only {len} values")]
    SymmetricDegree { m: usize, len: usize },

    #[error("row {n} lies below the restriction r = {r}")]
    RowBelowR { n: usize, r: usize },

    #[error("operation requires {expected}, got {got}")]
    WrongKind { expected: &'static str, got: &'static str },

    #[error("index precondition violated: {0}")]
    Precondition(String),

    #[error("nodes [p({i})] and [p({j})] coincide at the chosen q; the partial-fraction sum is undefined")]
    DegenerateNodes { i: usize, j: usize },

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },

    #[error("negative coefficient at position {pos}")]
    NegativeCoefficient { pos: usize },

    #[error("p(x) must not be the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("b-file line {line}: {msg}")]
    BFile { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
