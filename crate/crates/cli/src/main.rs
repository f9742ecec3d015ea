use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = dnaword::Cli::parse();
    ExitCode::from(dnaword::run(cli) as u8)
}
