mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(cli.global.threads) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::dispatch(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads(flag: Option<usize>) -> anyhow::Result<()> {
    let from_env = match std::env::var("THETA_TRUNC_THREADS") {
        Ok(v) => Some(v.parse::<usize>().map_err(|_| {
            anyhow::anyhow!("THETA_TRUNC_THREADS must be a positive integer, got `{v}`")
        })?),
        Err(_) => None,
    };
    if let Some(n) = flag.or(from_env) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}
