use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown root system type {label:?}; supported types: {}", supported.join(", "))]
    UnknownType {
        label: String,
        supported: Vec<&'static str>,
    },

    #[error("alcoves {a} and {b} are not adjacent")]
    NotAdjacent { a: String, b: String },

    #[error("step index {index} out of range for a gallery with {len} steps")]
    StepOutOfRange { index: usize, len: usize },

    #[error("step {index} is folded; an unfolded step is required")]
    StepFolded { index: usize },

    #[error("step {index} is unfolded; a folded step is required")]
    StepUnfolded { index: usize },

    #[error("operation requires a {expected} moment graph, got {found}")]
    Flavor {
        expected: &'static str,
        found: &'static str,
    },

    #[error("gallery has {len} steps, above the fold enumeration cap of {cap}; use a smaller region")]
    FoldCap { len: usize, cap: usize },

    #[error("cannot parse {what} {input:?} at position {position}: {message}")]
    Parse {
        what: &'static str,
        input: String,
        position: usize,
        message: String,
    },

    #[error("rendering needs a rank-2 root system, {label} has rank {rank}")]
    UnsupportedRender { label: String, rank: usize },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(
        what: &'static str,
        input: &str,
        position: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}
