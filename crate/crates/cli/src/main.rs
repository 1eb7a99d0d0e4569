mod commands;
mod config;
mod output;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Command, ConfigError};

/// Exit status 2 for bad configuration, 1 for numerical failures.
#[derive(Debug)]
pub enum CliError {
    Config(ConfigError),
    Numeric(univalent_core::Error),
    Io(std::io::Error),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

impl From<univalent_core::Error> for CliError {
    fn from(e: univalent_core::Error) -> Self {
        CliError::Numeric(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "{e}"),
            CliError::Numeric(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let (rendered, out) = match &cli.command {
        Command::Series(a) => (commands::series(a)?, &a.output.out),
        Command::Sequence(a) => (commands::sequence(a)?, &a.output.out),
        Command::Criterion(a) => (commands::criterion(a)?, &a.output.out),
        Command::Scan(a) => (commands::scan_grid(a)?, &a.output.out),
        Command::Bounds(a) => (commands::bounds(a)?, &a.output.out),
        Command::Area(a) => (commands::area(a)?, &a.output.out),
        Command::Grunsky(a) => (commands::grunsky(a)?, &a.output.out),
        Command::Selftest(a) => (commands::selftest(a)?, &a.output.out),
    };
    match out {
        Some(path) => std::fs::write(path, &rendered.text).map_err(CliError::Io)?,
        None => std::io::stdout()
            .write_all(rendered.text.as_bytes())
            .map_err(CliError::Io)?,
    }
    Ok(rendered.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Config(_) => 2,
                _ => 1,
            })
        }
    }
}
