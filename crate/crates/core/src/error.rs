use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ResourceError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{source_name}:{line}: {message}")]
    Malformed {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("{0}: no usable entries")]
    Empty(String),
    #[error("degenerate normalization corpus: {feature} has min {min} >= max {max}")]
    Degenerate { feature: &'static str, min: f64, max: f64 },
}

impl ResourceError {
    pub(crate) fn malformed(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        ResourceError::Malformed {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("description has no alphabetic content")]
    EmptyDescription,
    #[error("description contains only stopwords or untaggable words")]
    NoRoots,
    #[error("no blend satisfies the allowed rules")]
    NoCandidates,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoreError {
    #[error("name {0:?} is too short to score (needs at least 2 letters)")]
    TooShort(String),
    #[error("name {0:?} is not purely alphabetic")]
    NotAlphabetic(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RankError {
    #[error("preferences carry no learnable signal")]
    Unlearnable,
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Failure of a generate or rerank request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RequestError {
    #[error("invalid request: {0}")]
    Invalid(String),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Score(#[from] ScoreError),
}
