//! `macdo`: query decompositions and codings, enumerate families, and run
//! identity verifiers from the command line.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "macdo", version, about = "Partition combinatorics and exact identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood decomposition: core, quotient and core vector.
    Decompose {
        /// Comma-separated parts, e.g. `4,4,3,2`; empty for the empty partition.
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Core vector of a `t`-core.
    Vector {
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Boundary word around the median.
    Word { partition: String },
    /// V-coding of a doubled distinct or self-conjugate core.
    Vcoding {
        partition: String,
        #[arg(long)]
        t: usize,
        /// Modulus; defaults to `2t+2` for `dd` and `2t` for `sc`.
        #[arg(long)]
        g: Option<usize>,
        #[arg(long, value_enum, default_value_t = FamilyArg::Dd)]
        family: FamilyArg,
    },
    /// List a partition family up to a weight.
    Enumerate {
        /// `p`, `sc`, `dd`, `core`, `dd-core`, `sc-core`, or `core(5)` style.
        family: String,
        #[arg(long)]
        max: u64,
        /// Modulus for `core`, `dd-core`, `sc-core`.
        #[arg(long)]
        g: Option<u32>,
        /// Rank; sets the modulus to `t`, `2t+2` or `2t` by family.
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Run one verifier and report.
    Verify {
        identity: String,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Human-readable summary instead of JSON.
        #[arg(long, conflicts_with = "json")]
        text: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write or check the golden reports of the acceptance suite.
    Golden {
        #[arg(long, default_value = "golden")]
        dir: PathBuf,
        #[arg(long, conflicts_with = "check")]
        write: bool,
        #[arg(long)]
        check: bool,
        /// Restrict to one identity.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, env = "MACDO_WORKERS")]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Dd,
    Sc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Json,
}

/// Verifier parameters as given on the command line; unset flags fall back
/// to the config file, then to the verifier defaults.
#[derive(Args, Default, Clone)]
struct RunArgs {
    #[arg(long)]
    t: Option<usize>,
    /// `T` cap, a whole number or `n/2`.
    #[arg(long = "T-cap")]
    t_cap: Option<String>,
    #[arg(long = "q-cap")]
    q_cap: Option<u32>,
    #[arg(long)]
    max_core_weight: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    tau_trials: Option<usize>,
    #[arg(long)]
    memory_budget_mb: Option<u64>,
    #[arg(long, env = "MACDO_WORKERS")]
    workers: Option<usize>,
    /// `key=value` file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(code) => code,
        // A closed pipe (e.g. `| head`) is not an error of ours.
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    let kind = e
        .downcast_ref::<std::io::Error>()
        .map(std::io::Error::kind)
        .or_else(|| e.downcast_ref::<serde_json::Error>().and_then(serde_json::Error::io_error_kind));
    kind == Some(std::io::ErrorKind::BrokenPipe)
}
