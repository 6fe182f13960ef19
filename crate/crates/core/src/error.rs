use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("invalid DT code: {0}")]
    InvalidCode(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("DT code admits no planar realization")]
    NonRealizable,

    #[error("too many crossings: {n} exceeds the limit of {limit}")]
    TooManyCrossings { n: usize, limit: usize },

    #[error("expected a knot diagram, found {0} components")]
    MultiComponent(usize),

    #[error("crossing index {index} out of range for a {n}-crossing diagram")]
    SelectorOutOfRange { index: usize, n: usize },

    #[error("subset size k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("{count} subsets exceed the enumeration budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },

    #[error("zero polynomial has no span")]
    ZeroPolynomial,

    #[error("expected even integers, got s = {s}, sigma = {sigma}")]
    OddAbeInput { s: i64, sigma: i64 },

    #[error("unsupported Conway notation: {0}")]
    UnsupportedConway(String),

    #[error("census line {line}: {reason}")]
    Census { line: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
