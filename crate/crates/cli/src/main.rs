//! `k7lab` command-line front end.
//!
//! Exit codes: 0 success with the expected outcome, 1 verified but
//! unexpected outcome, 2 usage or input error, 3 I/O error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "k7lab",
    version,
    about = "Exact small-graph minor and enumeration laboratory"
)]
struct Cli {
    /// Worker threads (default 1: results never depend on it).
    #[arg(long, global = true, env = "K7LAB_THREADS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification campaign and write its JSON report.
    Verify(VerifyArgs),
    /// Test every graph of a graph6 corpus for a minor.
    Minor(MinorArgs),
    /// Enumerate graphs up to isomorphism into a graph6 corpus.
    Enum(EnumArgs),
    /// Random check that the extremal edge bound forces K_p minors.
    CheckMader(MaderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CampaignName {
    H8,
    Deg9,
    AppendixFive,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    campaign: CampaignName,
    /// Report path (stdout when omitted).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Override the expected headline count (counterexamples for h8,
    /// exceptions for deg9, survivors for appendix-five).
    #[arg(long)]
    expect: Option<u64>,
    /// Write minor certificates here and list every verdict in the report.
    #[arg(long)]
    certificates: Option<PathBuf>,
    /// Only run shard i of m (as i/m).
    #[arg(long)]
    shard: Option<String>,
    /// Record wall time in the report (makes reports differ between runs).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct MinorArgs {
    /// graph6 corpus, one graph per line.
    #[arg(long)]
    input: PathBuf,
    /// K_p, a named graph such as K3,3 or petersen, or graph6.
    #[arg(long)]
    target: String,
    /// Directory for one certificate file per positive verdict.
    #[arg(long)]
    certificates: Option<PathBuf>,
    /// Abort on the first malformed line instead of skipping it.
    #[arg(long)]
    strict: bool,
    /// Verdict lines go here (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// k4-free, alpha-le=K or triangle-free-complement; repeatable.
    #[arg(long = "filter")]
    filters: Vec<String>,
    /// Shard as i/m.
    #[arg(long)]
    shard: Option<String>,
    /// Resumable progress file; requires --output.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Corpus path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MaderArgs {
    #[arg(long, default_value_t = k7lab::harness::DEFAULT_SEED)]
    seed: u64,
    /// Random graphs per (p, n) pair.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Clique orders to test (default 4 to 7).
    #[arg(long = "p")]
    orders: Vec<usize>,
    /// Graph orders to sample (default 7 to 9).
    #[arg(long = "n")]
    sizes: Vec<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads as usize;
    let result = k7lab::exec::with_threads(threads, || match cli.command {
        Command::Verify(a) => commands::verify(a, threads),
        Command::Minor(a) => commands::minor(a, threads),
        Command::Enum(a) => commands::enumerate(a, threads),
        Command::CheckMader(a) => commands::check_mader(a, threads),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("k7lab: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
