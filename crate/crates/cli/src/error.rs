use thiserror::Error;

/// Failures surfaced to the shell, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Input {
        context: String,
        #[source]
        source: rbgs::Error,
    },
    #[error(transparent)]
    Engine(#[from] rbgs::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Input { .. } => 2,
            CliError::Engine(_) => 3,
        }
    }

    /// Wraps a parse-time error with the name of what was being read.
    pub fn input(context: impl Into<String>) -> impl FnOnce(rbgs::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Input { context, source }
    }
}
