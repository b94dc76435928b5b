use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown graph generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph girth {0} is below 5")]
    GirthTooSmall(usize),
    #[error("design has {design} points but graph has {graph} vertices")]
    DimensionMismatch { design: usize, graph: usize },
    #[error("design degree {design} does not match graph degree {graph}")]
    DegreeMismatch { design: usize, graph: usize },
    #[error("invalid block {block:?}: {reason}")]
    InvalidBlock { block: Vec<usize>, reason: String },
    #[error("duplicate block {0:?}")]
    DuplicateBlock(Vec<usize>),
    #[error("graph recovery failed: {0}")]
    RecoveryFailed(String),
    #[error("no builtin table for order {order} ({family})")]
    UnknownTable { order: usize, family: String },
    #[error("checksum mismatch for embedded table {0}")]
    ChecksumMismatch(String),
    #[error("no design exists for C{0}")]
    NoDesignExists(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("difference-triple search exhausted for m = {0}")]
    SearchExhausted(usize),
    #[error("invalid group divisible design: {0}")]
    InvalidGdd(String),
    #[error("no ingredient design for group size {0}")]
    MissingIngredient(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph generation failed: {0}")]
    GenerationFailed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable identifier, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownGenerator(_) => "unknown-generator",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::Parse { .. } => "parse",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::NotRegular => "not-regular",
            Error::GirthTooSmall(_) => "girth-too-small",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::InvalidBlock { .. } => "invalid-block",
            Error::DuplicateBlock(_) => "duplicate-block",
            Error::RecoveryFailed(_) => "recovery-failed",
            Error::UnknownTable { .. } => "unknown-table",
            Error::ChecksumMismatch(_) => "checksum-mismatch",
            Error::NoDesignExists(_) => "no-design-exists",
            Error::Unsupported(_) => "unsupported",
            Error::SearchExhausted(_) => "search-exhausted",
            Error::InvalidGdd(_) => "invalid-gdd",
            Error::MissingIngredient(_) => "missing-ingredient",
            Error::VerificationFailed(_) => "verification-failed",
            Error::PreconditionViolated(_) => "precondition-violated",
            Error::GenerationFailed(_) => "generation-failed",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
