use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod analyze;
mod construct;
mod input;
mod verify;

#[derive(Parser)]
#[command(name = "modcycle", version, about = "Graphs without cycles of length divisible by 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
    /// Write the output to FILE instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural facts about graphs given as graph6/sparse6
    Analyze {
        /// A graph6 string, a file with one graph per line, or "-" for stdin
        input: String,
        /// Modulus for residues
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Residue of the cycle lengths to look for
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a graph from an expression or an extremal family
    Construct {
        /// Expression such as "F6[a,b] (+) F4[a,b] (+) P4^2"
        expr: Option<String>,
        /// Extremal family G (even orders) or H (odd orders)
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Number of P4 sums in the family member
        #[arg(long)]
        k: Option<usize>,
        /// Order of the family member (alone: pick the family by parity)
        #[arg(long)]
        n: Option<usize>,
        /// Also list every graph reachable by reversals
        #[arg(long)]
        reverse: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive checks; the JSON report is always printed
    Verify {
        #[arg(value_enum)]
        task: verify::VerifyTask,
        #[arg(long)]
        n: Option<usize>,
        /// all, connected or biconnected
        #[arg(long, default_value = "all")]
        class: String,
        /// Named pair of residues mod 4, e.g. 03 or 0,3
        #[arg(long = "L", value_name = "L")]
        pair: Option<String>,
        /// Worker threads for the enumeration
        #[arg(long)]
        workers: Option<usize>,
        /// Graphs to audit (lemma-audit only): graph6, file or "-"
        input: Option<String>,
        /// Write the extremal graphs as graph6, one per line, to FILE
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Accepted for uniformity; verify always prints JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Whether all expectations of a command were met.
pub type Verified = bool;

/// Writes to stdout or to the `--out` file.
pub fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Verified, CliError> {
    match cli.command {
        Command::Analyze { input, k, l, output } => analyze::run(&input, k, l, &output),
        Command::Construct { expr, family, k, n, reverse, output } => {
            construct::run(expr.as_deref(), family, k, n, reverse, &output)
        }
        Command::Verify { task, n, class, pair, workers, input, out, json: _ } => {
            verify::run(task, n, &class, pair.as_deref(), workers, input.as_deref(), &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
