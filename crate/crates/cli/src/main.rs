use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = qglue::Cli::parse();
    match qglue::run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qglue: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
