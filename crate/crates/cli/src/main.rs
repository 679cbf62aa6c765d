use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

mod commands;

use commands::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match commands::run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            if e.is_limit() {
                3
            } else {
                2
            }
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
