//! Plain-text model files, deterministic reports and the command front end.

mod commands;
mod parse;
mod print;
mod report;

pub use commands::{parse_argv, run_command, CommandArgs, USAGE};
pub use parse::{ModelFile, ParseError, Section, SectionKind};
pub use print::{print_algebra, print_lie, print_section};
pub use report::Report;

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { file: String, error: ParseError },
    Input(String),
    Internal(String),
}

impl CliError {
    /// 0 success, 1 input error, 2 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Parse { file, error } => {
                write!(f, "{file}:{}:{}: {}", error.line, error.col, error.message)
            }
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
