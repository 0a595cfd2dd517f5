use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use resetleak::cli::{self, CliError};

#[derive(Parser)]
#[command(name = "resetleak", version, about = "State-leakage simulation across qubit resets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate attacker P(-1) over victim angles into a CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the config's master_seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; 0 picks the machine default.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Tabulate empirical and theoretical SNR over an error-rate grid.
    SnrGrid {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Run the built-in self checks.
    Verify {
        /// Reduced grids and shot counts.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

fn run() -> Result<(), CliError> {
    match Cli::parse().command {
        Command::Sweep {
            config,
            out,
            seed,
            threads,
        } => {
            let paths = cli::cmd_sweep(&config, &out, seed, threads)?;
            for path in paths {
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::SnrGrid {
            config,
            out,
            seed,
            threads,
        } => {
            let paths = cli::cmd_snr_grid(&config, &out, seed, threads)?;
            for path in paths {
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::Verify {
            quick,
            seed,
            threads,
        } => {
            let report = cli::cmd_verify(quick, seed, threads)?;
            print!("{}", report.render());
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !matches!(err, CliError::Verification) {
                eprintln!("{err}");
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
