use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use omega_forge::commands::{output_path, run, Status};
use omega_forge::RunConfig;

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::Usage as u8),
            };
        }
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.status as u8);
        }
    };
    match output_path(&config) {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report.body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(Status::Usage as u8);
            }
        }
        None => print!("{}", report.body),
    }
    ExitCode::from(report.status as u8)
}
