use sullivan_core::cohomology::CohomologyError;
use sullivan_core::criteria::CriteriaError;
use sullivan_core::models::ModelError;
use sullivan_core::CdgaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for bad input, 2 for failures during computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Computation(_) => 2,
            _ => 1,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CdgaError> for CliError {
    fn from(e: CdgaError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        CliError::Computation(e.to_string())
    }
}

impl From<CriteriaError> for CliError {
    fn from(e: CriteriaError) -> Self {
        match e {
            CriteriaError::Model(m) => m.into(),
            other => CliError::Computation(other.to_string()),
        }
    }
}
