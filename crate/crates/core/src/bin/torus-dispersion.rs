use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use torus_dispersion::cli::{run, Cli, EXIT_INPUT, EXIT_OK};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            // usage errors are input errors, not clap's default status 2
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_INPUT as u8),
            };
        }
    };
    let outcome = run(&cli);
    match &outcome.output {
        Some(path) => {
            if let Err(err) = std::fs::write(path, &outcome.text) {
                eprintln!("cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.exit_code as u8)
}
