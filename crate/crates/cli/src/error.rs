use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Io(_) => 1,
        })
    }
}

impl From<triboson_core::Error> for CliError {
    fn from(e: triboson_core::Error) -> Self {
        use triboson_core::Error::*;
        match e {
            ZeroState | NonUnitary(_) | NotNormalized(_) | OutOfRange(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Solver(e.to_string()),
        }
    }
}
