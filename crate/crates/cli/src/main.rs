mod args;
mod commands;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use args::{Cli, Command};
use clap::Parser;

const VERIFICATION_FAILED: u8 = 1;
const USAGE_ERROR: u8 = 2;

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            anyhow::bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    match &cli.command {
        Command::Field(cmd) => commands::field(cmd).map(|_| true),
        Command::Cddt(cmd) => commands::cddt(cmd).map(|_| true),
        Command::Cdu(cmd) => commands::cdu(cmd).map(|_| true),
        Command::Spectrum(cmd) => commands::spectrum(cmd).map(|_| true),
        Command::ScanMonomials(cmd) => commands::scan_monomials(cmd).map(|_| true),
        Command::Interpolate(cmd) => commands::interpolate(cmd).map(|_| true),
        Command::Verify(cmd) => verify::run(cmd),
        Command::Report(cmd) => commands::report(cmd).map(|_| true),
        Command::Charsum(cmd) => commands::charsum(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
