use std::path::Path;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Numeric(fqt_core::Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Numeric(_) => 4,
            CliError::Io(_) => 5,
        })
    }

    pub fn from_csv(path: &Path, e: csv::Error) -> Self {
        if e.is_io_error() {
            CliError::Io(format!("{}: {e}", path.display()))
        } else {
            CliError::Parse(format!("{}: {e}", path.display()))
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Numeric(e) => write!(f, "error: {e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<fqt_core::Error> for CliError {
    fn from(e: fqt_core::Error) -> Self {
        CliError::Numeric(e)
    }
}
