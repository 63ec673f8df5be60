use std::path::Path;

use plagsim::corpus::CorpusError;
use plagsim::dataset::DatasetError;
use plagsim::frontend::FrontendError;
use plagsim::learn::LearnError;

/// Failure of a command, grouped by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Filesystem or environment problem (exit 1).
    Io(String),
    /// Unparseable or unusable input (exit 2).
    Input(String),
    /// Invalid flags or hyperparameters (exit 3).
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
        }
    }

    pub fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }

    /// Prefixes the message with the file it concerns.
    pub fn with_context(self, path: &Path) -> Self {
        let prefix = |m: String| format!("{}: {m}", path.display());
        match self {
            CliError::Io(m) => CliError::Io(prefix(m)),
            CliError::Input(m) => CliError::Input(prefix(m)),
            CliError::Config(m) => CliError::Config(prefix(m)),
        }
    }

    pub fn frontend(path: &Path, e: &FrontendError) -> Self {
        let (line, column) = e.position();
        CliError::Input(format!("{}:{line}:{column}: {e}", path.display()))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) | CliError::Input(m) | CliError::Config(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        match &e {
            CorpusError::MissingRoot(_) | CorpusError::Io { .. } => CliError::Io(e.to_string()),
            CorpusError::Parse { .. } | CorpusError::Layout { .. } => CliError::Input(e.to_string()),
        }
    }
}

impl From<DatasetError> for CliError {
    fn from(e: DatasetError) -> Self {
        match e {
            DatasetError::Io(_) => CliError::Io(e.to_string()),
            DatasetError::InvalidConfig(_) => CliError::Config(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<LearnError> for CliError {
    fn from(e: LearnError) -> Self {
        match e {
            LearnError::InvalidHyperparameters(_) => CliError::Config(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
