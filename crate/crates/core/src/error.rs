use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("bad character at index {0}")]
    BadCharacter(usize),
    #[error("no value bound for symbol `{0}`")]
    MissingSymbol(char),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("{what} limit exceeded: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("path configuration has crossing paths")]
    CrossingPaths,
    #[error("path configuration has wrong endpoints or path count")]
    BadEndpoints,
    #[error("tile set does not tile the diagram")]
    InvalidTiling,
    #[error("no hexagon at ({0}, {1})")]
    NotAHexagon(i64, i64),
    #[error("local filling of the hexagon at ({0}, {1}) matches no flip case")]
    NoCaseMatch(i64, i64),
    #[error("invalid chain parameters: {0}")]
    BadParams(String),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("closed form is undefined at alpha = beta")]
    AlphaEqualsBeta,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("filling is not on the minimal tiling")]
    NotMinimalTiling,
    #[error("filling has a q-weighted tile")]
    NotQZero,
    #[error("bijection produced an invalid multi-Catalan tableau for {0}")]
    BijectionFailure(String),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
}

pub type Result<T> = std::result::Result<T, Error>;
