use thiserror::Error;

/// Errors raised by the geometric operations and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("lines are parallel")]
    Parallel,
    #[error("projections are parallel")]
    ProjParallel,
    #[error("family is not strictly 2-intersecting")]
    NotStrict2,
    #[error("family is not good: a common transversal exists")]
    NotGood,
    #[error("sets {0} and {1} are mutually tangent")]
    TangentPair(usize, usize),
    #[error("hole region is degenerate: {0}")]
    EmptyHole(String),
    #[error("precondition violated: {0}")]
    PreViolated(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(u64),
    #[error("no set meets the plane")]
    NoSections,
    #[error("family is not pairwise intersecting (sets {0} and {1})")]
    NotPairwise(usize, usize),
    #[error("x-coordinates are not strictly increasing")]
    BadOrder,
    #[error("generator failed: {0}")]
    GenFailed(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
