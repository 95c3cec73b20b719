//! `sparseres`: greedy sparse resultant matrices from a spec file.
//!
//! Exit codes: 0 success, 2 invalid spec or arguments, 3 failed verification, 4 I/O error.

mod commands;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sparseres::oracles::DEFAULT_PRIME;
use sparseres::ExportFormat;

#[derive(Parser)]
#[command(name = "sparseres", version, about = "Greedy sparse resultant matrices for box and multihomogeneous systems")]
struct Cli {
    /// Proceed even when the system has more than 10^7 lattice points.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Point count, greedy matrix size and mixed volumes.
    Sizes { spec: PathBuf },
    /// Every cell of the subdivision with its type vector and point count.
    Subdivision { spec: PathBuf },
    /// Export a symbolic matrix.
    Matrix(MatrixArgs),
    /// Run the structural checks and the randomized quotient checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MatrixArgs {
    spec: PathBuf,
    /// Rows reachable from the mixed cells (default).
    #[arg(long, conflicts_with = "full")]
    greedy: bool,
    /// Rows for every lattice point.
    #[arg(long)]
    full: bool,
    /// Keep only the rows of non-mixed cells.
    #[arg(long)]
    principal: bool,
    #[arg(long, value_enum, default_value_t = Format::Triplet)]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    spec: PathBuf,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Matrices on all lattice points are only built up to this many points.
    #[arg(long, default_value_t = 1500)]
    full_limit: usize,
    /// Print the whole report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Triplet,
    Dense,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Triplet => ExportFormat::Triplet,
            Format::Dense => ExportFormat::Dense,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Spec(String),
    Verification(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Spec(m) => write!(f, "invalid spec: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<sparseres::Error> for CliError {
    fn from(e: sparseres::Error) -> Self {
        CliError::Spec(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let out = match cli.command {
        Command::Sizes { spec } => commands::sizes(&spec::load(&spec, cli.force)?)?,
        Command::Subdivision { spec } => commands::subdivision(&spec::load(&spec, cli.force)?)?,
        Command::Matrix(a) => {
            let s = spec::load(&a.spec, cli.force)?;
            let bytes = commands::matrix(&s, a.full, a.principal, a.format.into())?;
            return match a.out {
                Some(path) => std::fs::write(&path, bytes)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
                None => commands::emit(&bytes),
            };
        }
        Command::Verify(a) => {
            let s = spec::load(&a.spec, cli.force)?;
            let opts = commands::VerifyOptions {
                prime: a.prime,
                trials: a.trials,
                seed: a.seed,
                full_limit: a.full_limit,
                json: a.json,
            };
            let (text, ok) = commands::verify(&s, &opts)?;
            commands::emit(text.as_bytes())?;
            return if ok {
                Ok(())
            } else {
                Err(CliError::Verification("see FAIL lines above".into()))
            };
        }
    };
    commands::emit(out.as_bytes())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sparseres: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
