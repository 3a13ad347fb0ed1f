mod args;
mod commands;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use qcs_core::table::Table;

use args::{Cli, Command, Format, GlobalOpts};

#[derive(Debug)]
pub enum CliError {
    Core(qcs_core::Error),
    /// Missing or inconsistent command-line arguments.
    Usage(String),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_convergence_error() => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl From<qcs_core::Error> for CliError {
    fn from(e: qcs_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// Renders `table` and writes it to the configured destination.
pub fn emit(table: &Table, global: &GlobalOpts, default_stem: &str) -> Result<(), CliError> {
    let text = match global.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    let path = match (&global.out, &global.out_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            Some(dir.join(format!("{default_stem}.{}", global.format.extension())))
        }
        (None, None) => None,
    };
    match path {
        Some(p) => write_file(&p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => commands::eval(a, &cli.global).map(|()| true),
        Command::Verify(a) => commands::verify(a, &cli.global),
        Command::Export(a) => commands::export(a, &cli.global).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
