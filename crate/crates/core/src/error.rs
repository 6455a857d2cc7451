use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty formula")]
    EmptyInput,

    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },

    #[error("unbalanced parenthesis at byte {offset}")]
    UnbalancedParen { offset: usize },

    #[error("ambiguous mix of `->` and `<-` at byte {offset}; add parentheses")]
    AmbiguousImplication { offset: usize },

    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),

    #[error("duplicate variable `{0}` in order")]
    DuplicateVariable(String),

    #[error("variable `{0}` is not in the variable order")]
    UnknownVariable(String),

    #[error("missing value for variable `{0}`")]
    MissingAssignment(String),

    #[error("{count} variables exceed the limit of {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("state norm {norm_sqr} differs from 1 beyond tolerance")]
    NormViolation { norm_sqr: f64 },

    #[error("theta {0} outside [0, pi]")]
    ThetaOutOfRange(f64),

    #[error("empty bit list")]
    EmptyBits,

    #[error("unknown state name `{0}`")]
    UnknownState(String),

    #[error("invalid state file: {0}")]
    InvalidStateFile(String),

    #[error("invalid probability space: {0}")]
    InvalidSpace(String),

    #[error("decomposition weights sum to {sum}, not 1")]
    WeightsNotNormalized { sum: f64 },

    #[error("conditioning event has probability {prior}; conditional undefined")]
    ZeroPrior { prior: f64 },

    #[error("alpha interpolation denominator vanishes")]
    ZeroDenominator,

    #[error("alpha {0} outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("P(A and B) = {and} exceeds P(A) = {a}")]
    InconsistentProbabilities { a: f64, and: f64 },

    #[error("event list is empty")]
    NoEvents,

    #[error("{count} events exceed the limit of {max}")]
    TooManyEvents { count: usize, max: usize },

    #[error("invalid projector text: {0}")]
    InvalidProjector(String),
}
