use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tropos_cli::cli::Cli;
use tropos_cli::{execute, CliError};

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("TROPOS_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Parse(format!("TROPOS_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Other(format!("cannot configure thread pool: {e}")))
}

fn run(cli: &Cli) -> Result<(), CliError> {
    configure_threads()?;
    let report = execute(cli)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    match &cli.output {
        Some(path) => std::fs::write(path, &report.text)
            .map_err(|e| CliError::Other(format!("cannot write {}: {e}", path.display())))?,
        None => std::io::stdout().write_all(report.text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tropos: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
