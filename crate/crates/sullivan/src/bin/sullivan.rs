//! Thin command-line front end: parse arguments, load model files, dispatch
//! to the library, print the report. Exit codes: 0 success, 1 input error,
//! 2 internal invariant violation.

use std::process::ExitCode;
use sullivan::io::{parse_argv, run_command, CliError, ModelFile, USAGE};

fn run() -> Result<String, CliError> {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if argv.is_empty() || argv[0] == "--help" || argv[0] == "-h" {
        return Ok(USAGE.to_string());
    }
    let (command, args, paths) = parse_argv(&argv)?;
    let mut files = Vec::new();
    for p in &paths {
        let text = std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?;
        let file = ModelFile::parse(&text).map_err(|error| CliError::Parse {
            file: p.display().to_string(),
            error,
        })?;
        files.push(file);
    }
    let report = run_command(&command, &args, &files)?;
    Ok(report.to_text())
}

fn main() -> ExitCode {
    match std::panic::catch_unwind(run) {
        Ok(Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            eprintln!("internal invariant violation: {msg}");
            ExitCode::from(2)
        }
    }
}
