use std::path::PathBuf;

use gsp_frames::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{context}: {source}")]
    Parse { context: String, source: Error },

    #[error("{0}")]
    Analysis(#[from] Error),

    #[error("criterion and oracle disagree")]
    Disagreement,
}

impl CliError {
    pub fn parse(context: impl Into<String>) -> impl FnOnce(Error) -> CliError {
        let context = context.into();
        move |source| CliError::Parse { context, source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Parse { .. } => 3,
            CliError::Disagreement => 4,
            CliError::Analysis(e) => match e {
                Error::ConvergenceFailure(_) | Error::SingularFrameOperator { .. } => 4,
                Error::MalformedLine { .. }
                | Error::SelfLoop { .. }
                | Error::DuplicateEdge { .. }
                | Error::NonPositiveWeight { .. }
                | Error::DuplicateAbscissa(_)
                | Error::EmptyKernel => 3,
                _ => 2,
            },
        }
    }
}
