use thiserror::Error;

use crate::diagram::Event;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a diagram needs at least one source")]
    NoSources,

    #[error("event {position} ({event}) is invalid with {strands} strand(s)")]
    InvalidEvent {
        position: usize,
        event: Event,
        strands: usize,
    },

    #[error("cannot compose: left diagram has {left_sinks} sink(s), right diagram has {right_sources} source(s)")]
    Composition {
        left_sinks: usize,
        right_sources: usize,
    },

    #[error("forest has {found} source(s) but {expected} strand(s) are available")]
    ForestArity { expected: usize, found: usize },

    #[error("an elementary forest needs at least one component")]
    EmptyForest,

    #[error("caret weight {0} is outside [0, 1]")]
    WeightOutOfRange(String),

    #[error("expected a ({expected_sources}, {expected_sinks}) diagram, got ({sources}, {sinks})")]
    Shape {
        expected_sources: String,
        expected_sinks: String,
        sources: usize,
        sinks: usize,
    },

    #[error("configuration is empty")]
    EmptyConfiguration,

    #[error("tuple is not a point of CF: {0}")]
    NotInCf(String),

    #[error("tuple is not a point of DF: {0}")]
    NotInDf(String),

    #[error("entry {index} cannot be duplicated: it is closer than 1 to a neighbour")]
    Spacing { index: usize },

    #[error("index {index} is out of range for a tuple of length {len}")]
    Index { index: usize, len: usize },

    #[error("parameter {0} is outside [0, 1]")]
    ParameterOutOfRange(String),

    #[error("the given vertex is not a corner of the cube")]
    NotACorner,

    #[error("expected {expected} coordinate(s), got {found}")]
    CoordinateArity { expected: usize, found: usize },

    #[error("ball exploration exceeded the vertex cap of {cap}")]
    BallCap { cap: usize },

    #[error("move {position} expects {expected} strand(s) but the loop is at {found}")]
    MoveArity {
        position: usize,
        expected: usize,
        found: usize,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Parse errors and unsupported requests map to exit status 2; everything
    /// else is a domain rejection.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Unsupported(_))
    }
}
