use thiserror::Error;

/// Errors raised by the analysis routines. The variant name is what the CLI
/// prints as the error kind.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{inner} is not contained in {outer}")]
    ContainmentError { inner: String, outer: String },

    #[error("partitions have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("shape {shape} does not live at level {level}")]
    ShapeLevelMismatch { shape: String, level: usize },

    #[error("labeled partitions live at different levels ({left} vs {right})")]
    LevelMismatch { left: usize, right: usize },

    #[error("operation not available in regime {regime}: {reason}")]
    RegimeMismatch { regime: String, reason: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("interpolation denominator vanishes: {0}")]
    ZeroDenominator(String),

    #[error("spectral value is neither 0 nor 1 on path {0}")]
    NotIdempotent(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable name of the variant, used by front ends.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ContainmentError { .. } => "ContainmentError",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::ShapeLevelMismatch { .. } => "ShapeLevelMismatch",
            Error::LevelMismatch { .. } => "LevelMismatch",
            Error::RegimeMismatch { .. } => "RegimeMismatch",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::ZeroDenominator(_) => "ZeroDenominator",
            Error::NotIdempotent(_) => "NotIdempotent",
            Error::Parse { .. } => "ParseError",
        }
    }
}
