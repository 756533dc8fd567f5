use std::fmt;

use flt_lab_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RUNTIME: i32 = 2;
pub const EXIT_FOUND: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// A usage error followed by help text.
    UsageWithHelp(String, String),
    Runtime(String),
    /// Standard output was closed by the reader.
    BrokenPipe,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::UsageWithHelp(..) => EXIT_USAGE,
            CliError::Runtime(_) | CliError::BrokenPipe => EXIT_RUNTIME,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::UsageWithHelp(m, help) => write!(f, "error: {m}\n\n{help}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
            CliError::BrokenPipe => write!(f, "error: broken pipe"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(m) => CliError::Usage(m),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError::BrokenPipe;
        }
        CliError::Runtime(e.to_string())
    }
}
