use std::process::ExitCode;

use clap::Parser;
use ggadget::{max_ell_from_env, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status =
        max_ell_from_env().and_then(|max_ell| run(&cli, max_ell, &mut std::io::stdout().lock()));
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("ggadget: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
