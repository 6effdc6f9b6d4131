//! `tritcodes`: construct the ternary cyclic codes `C_(u,v)`, verify their
//! minimum distance and compute dual weight enumerators.

mod commands;
mod fixtures;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tritcodes::TernaryPoly;

use commands::{CliError, Method, Output, RunConfig};

#[derive(Parser)]
#[command(name = "tritcodes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the code and print its parameters and generator polynomial.
    Construct(Args),
    /// Show that the minimum distance is 4.
    VerifyDistance(Args),
    /// Compute the weight enumerator of the dual code.
    DualSpectrum(Args),
    /// Scan GF(3^m)* for solutions of (x^(3^l) + e)(x^(3^l) - x) = 1.
    LemmaCheck(Args),
    /// Run every check and compare against the bundled fixtures.
    Report(Args),
}

#[derive(clap::Args)]
struct Args {
    /// Odd extension degree, 3 <= m <= 13.
    #[arg(long)]
    m: u32,
    /// Field modulus as ascending trits, e.g. 1,2,0,0,0,1 for x^5+2x+1.
    #[arg(long)]
    modulus: Option<TernaryPoly>,
    /// Dual enumerator route.
    #[arg(long, value_enum, default_value = "spectral")]
    method: Method,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Work ceiling for the brute-force distance oracle.
    #[arg(long)]
    budget: Option<u128>,
}

impl Args {
    fn config(&self) -> RunConfig {
        let mut cfg = RunConfig::new(self.m);
        cfg.modulus = self.modulus.clone();
        cfg.method = self.method;
        if let Some(w) = self.workers {
            cfg.workers = w as usize;
        }
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        cfg
    }
}

fn run(cli: Cli) -> Result<(Output, Option<PathBuf>), CliError> {
    let (args, cmd): (&Args, fn(&RunConfig) -> Result<Output, CliError>) = match &cli.command {
        Command::Construct(a) => (a, commands::cmd_construct),
        Command::VerifyDistance(a) => (a, commands::cmd_verify_distance),
        Command::DualSpectrum(a) => (a, commands::cmd_dual_spectrum),
        Command::LemmaCheck(a) => (a, commands::cmd_lemma_check),
        Command::Report(a) => (a, commands::cmd_report),
    };
    let cfg = args.config();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let out = pool.install(|| cmd(&cfg))?;
    Ok((out, args.out.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, path)) => {
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, &out.json) {
                        eprintln!("error: writing {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", out.json),
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
