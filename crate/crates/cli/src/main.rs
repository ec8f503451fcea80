use std::process::ExitCode;

use clap::Parser;
use quasimode_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match quasimode_cli::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
