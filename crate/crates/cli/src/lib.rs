//! `madness`: reproduce the target-puzzle tables from the command line.
//!
//! Every subcommand builds a [`output::Report`]; the report is printed in the
//! requested format and, with `--out`, written as CSV files plus JSON mirrors.

pub mod cache;
pub mod commands;
pub mod expected;
pub mod output;

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "madness",
    version,
    about = "Solution numbers for the 2x2x2 MacMahon cube target puzzle"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory to write CSV and JSON report files into.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Cache sweep results here; nothing is cached without it.
    #[arg(long, env = "MADNESS_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Compare results against the published values; mismatches exit with 3.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// The 30 cubes with face colors and corner numbers.
    Cubes,
    /// Solution number of one collection for one target.
    Solve(SolveArgs),
    /// Solution-number distribution over all collections for a target.
    Table1 {
        #[arg(long, default_value = "Ba")]
        target: String,
    },
    /// Number of buildable targets over all collections.
    Table2,
    /// The 360 collections that build five targets.
    FiveTargets {
        /// Cross-check the generated collections against a full sweep.
        #[arg(long)]
        verify: bool,
    },
    /// The ten conjectured minimum universal 12-sets.
    Universal,
    /// Buildable counts over all k-subsets of a universal set.
    Figure7 {
        /// A single subset size (8..=11); all four by default.
        #[arg(long)]
        k: Option<usize>,
        /// Which of the ten universal sets (0..=9).
        #[arg(long, default_value_t = 0)]
        set: usize,
    },
    /// Buildable counts of random k-subsets of all 30 cubes.
    Sample {
        /// A single subset size; 9..=12 by default.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 20_000)]
        n: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Buildable counts over every k-subset of the 30 cubes (exact, slow for k > 9).
    Census {
        #[arg(long)]
        k: usize,
    },
    /// Scan all 12-subsets for universal sets (long-running, resumable).
    Search {
        /// Sets to examine (e.g. 1000000) or wall time (e.g. 90s, 30m, 2h).
        #[arg(long)]
        budget: Option<Budget>,
        /// Checkpoint file; progress resumes from it when present.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Run every table and figure in one go.
    Reproduce,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub target: String,
    /// Eight comma-separated cube names, e.g. Ac,Ad,Ae,Af,Cb,Db,Eb,Fb.
    #[arg(long)]
    pub cubes: String,
    /// Also count arrangements that solve the interior-matching puzzle.
    #[arg(long)]
    pub interior: bool,
    /// List every arrangement.
    #[arg(long)]
    pub arrangements: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Sets(u64),
    Time(Duration),
}

impl FromStr for Budget {
    type Err = String;

    fn from_str(s: &str) -> Result<Budget, String> {
        let s = s.trim();
        let unit = match s.chars().last() {
            Some('s') => 1,
            Some('m') => 60,
            Some('h') => 3600,
            _ => {
                return s
                    .replace('_', "")
                    .parse()
                    .map(Budget::Sets)
                    .map_err(|_| format!("invalid budget '{s}'"))
            }
        };
        let n: u64 = s[..s.len() - 1]
            .parse()
            .map_err(|_| format!("invalid budget '{s}'"))?;
        Ok(Budget::Time(Duration::from_secs(n * unit)))
    }
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const MISMATCH: i32 = 3;
    pub const BUDGET_EXHAUSTED: i32 = 4;
}

/// Errors with a dedicated exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
}

/// Exit code for an error that aborted a command.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    use madness_core::Error as E;
    if err.downcast_ref::<CliError>().is_some() {
        return exit::VALIDATION;
    }
    match err.downcast_ref::<E>() {
        Some(E::OracleMismatch(_)) => exit::MISMATCH,
        Some(E::Checkpoint(_) | E::Bootstrap(_)) | None => exit::FAILURE,
        Some(_) => exit::VALIDATION,
    }
}

/// Run a parsed command line: returns stdout text and the exit code.
pub fn run(cli: &Cli) -> anyhow::Result<(String, i32)> {
    if let Some(n) = cli.global.threads {
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let reports = commands::execute(&cli.command, &cli.global)?;
    if let Some(dir) = &cli.global.out {
        for r in &reports {
            r.write_files(dir)?;
        }
    }
    let stdout = output::render(&reports, cli.global.format)?;
    let code = reports
        .iter()
        .map(|r| r.status.exit_code())
        .max()
        .unwrap_or(exit::SUCCESS);
    Ok((stdout, code))
}
