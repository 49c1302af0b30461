//! Command-line front end: generators, C5 checking, structure search and
//! verification, pair certificates, outsimplicial splitting, and the
//! experiment runner.
//!
//! Exit codes: 0 success (or "free"/"pass" verdicts), 2 parse or argument
//! errors, 10 C5 witness found, 11 structure finder came up empty,
//! 12 unverified structure, 13 certificate verification failed,
//! 14 input digraph not outsimplicial.

mod commands;
mod documents;
mod formats;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "c5eh",
    version,
    about = "Strong Erdős–Hajnal witnesses for C5-free tournaments",
    long_about = "Generates tournaments and outsimplicial digraphs, detects C5 \
                  subtournaments, verifies smooth structures, and produces checkable \
                  certificates: complete pairs, C5 witnesses, and digraph splits."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file (all generators require an explicit seed)
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run detectors against an input file
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Find or verify smooth structures
    Structure {
        #[command(subcommand)]
        action: StructureAction,
    },
    /// Produce or re-check pair/witness certificates
    Pair {
        #[command(subcommand)]
        action: PairAction,
    },
    /// Split an outsimplicial digraph into a certified pair of sets
    Split {
        /// Digraph file
        input: PathBuf,
        /// Write the split certificate here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a generator/pipeline grid and write a CSV of outcomes
    Experiment(ExperimentArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniform random tournament
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// C5-free tournament via recursive substitution
    C5free {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Planted-blocks tournament with its smooth structure
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, value_parser = documents::parse_rational, default_value = "1/5")]
        c: Rational64,
        #[arg(long, value_parser = documents::parse_rational, default_value = "0")]
        noise: Rational64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the planted structure document
        #[arg(long)]
        structure_out: Option<PathBuf>,
    },
    /// Outsimplicial digraph (chordal orientation, optional blow-up)
    Outsimp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        blowup: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CheckKind {
    /// Search for a C5 subtournament (exit 0 when free, 10 when found)
    C5 {
        /// Tournament file
        input: PathBuf,
        /// Use the exhaustive isomorphism oracle (n <= 14)
        #[arg(long)]
        oracle: bool,
        /// Write a witness certificate here when one is found
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum StructureAction {
    /// Heuristic search for a smooth structure (exit 11 when none is found)
    Find {
        /// Tournament file
        input: PathBuf,
        #[arg(long, value_parser = documents::parse_rational)]
        c: Rational64,
        #[arg(long, value_parser = documents::parse_rational, default_value = "1/5")]
        lambda: Rational64,
        /// 0/1 string, e.g. 00000 (only all-zero is searchable)
        #[arg(long, default_value = "00000")]
        w: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        attempts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a structure document against a tournament
    Verify {
        /// Tournament file
        input: PathBuf,
        /// Structure document
        structure: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Smooth)]
        mode: ModeArg,
        /// Write a report document here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PairAction {
    /// Run the pipeline: tournament + verified structure -> pair or witness
    Find {
        /// Tournament file
        input: PathBuf,
        /// Structure document
        structure: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check any certificate document against its input file
    Verify {
        /// Input file the certificate refers to (tournament or digraph)
        input: PathBuf,
        /// Certificate document
        certificate: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Plain,
    Smooth,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Experiment kind
    #[arg(long, default_value = "eh-stats")]
    kind: String,
    /// Comma-separated list of sizes
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<usize>,
    /// Number of seeds per size (seeds 0..count)
    #[arg(long)]
    seeds: u64,
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, value_parser = documents::parse_rational, default_value = "1/5")]
    c: Rational64,
    #[arg(long, value_parser = documents::parse_rational, default_value = "1/5")]
    lambda: Rational64,
    #[arg(long, value_parser = documents::parse_rational, default_value = "0")]
    noise: Rational64,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Record wall-clock runtimes (breaks byte-for-byte reproducibility;
    /// the column is 0 otherwise)
    #[arg(long)]
    timing: bool,
}

fn main() {
    let cli = Cli::parse();
    let code = match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}
