use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid Hopf algebra: {0}")]
    InvalidHopf(String),
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("B is not free over A: {0}")]
    NotFree(String),
    #[error("object is not dualizable: {0}")]
    NotDualizable(String),
    #[error("context lacks {0}")]
    MissingFunctor(&'static str),
    #[error("no dualizing object found: {0}")]
    NoDualizingObjectFound(String),
    #[error("omega is not an isomorphism: {0}")]
    OmegaNotIso(String),
    #[error("isomorphism witness missing: {0}")]
    WitnessMissing(String),
    #[error("assertion failed: {0}")]
    AssertionFailure(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code for the CLI; 1 is reserved for failed checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::NotFree(_) => 3,
            Error::NoDualizingObjectFound(_) => 4,
            Error::OmegaNotIso(_) => 5,
            _ => 6,
        }
    }

    /// Short machine-readable kind, used in error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "Dimension",
            Error::SingularMatrix(_) => "SingularMatrix",
            Error::Config(_) => "ConfigError",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::InvalidHopf(_) => "InvalidHopf",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::ObjectMismatch(_) => "ObjectMismatch",
            Error::NotIntertwiner(_) => "NotIntertwiner",
            Error::InvalidModule(_) => "InvalidModule",
            Error::NotFree(_) => "NotFree",
            Error::NotDualizable(_) => "NotDualizable",
            Error::MissingFunctor(_) => "MissingFunctor",
            Error::NoDualizingObjectFound(_) => "NoDualizingObjectFound",
            Error::OmegaNotIso(_) => "OmegaNotIso",
            Error::WitnessMissing(_) => "WitnessMissing",
            Error::AssertionFailure(_) => "AssertionFailure",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}
