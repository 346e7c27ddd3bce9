//! `dyadim` — command-line access to exact base-two digit expansions,
//! dimension solvers for digit-constrained sets, index-schedule profiles,
//! seeded measure samplers, and box-dimension estimates.
//!
//! Every run is deterministic: the seed defaults to a fixed constant, and
//! identical flags produce byte-identical output files regardless of
//! thread count.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

mod commands;
mod input;
mod output;
mod resolve;
mod svg;

use commands::{dims, estimate, expand, sample, schedule};

/// Deterministic sampling and estimation toolkit for base-two digit
/// expansions and the fractal sets they define.
#[derive(Debug, Parser)]
#[command(name = "dyadim", version, about, max_term_width = 100)]
struct Cli {
    /// Directory output files are written into (created if missing).
    #[arg(long, global = true, env = "DYADIM_OUT_DIR", default_value = ".")]
    out_dir: PathBuf,

    /// Cap worker threads for parallel sampling and counting
    /// (default: all cores; has no effect on the computed results).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a point of (0, 1] into its base-two digit sequence.
    Expand(expand::ExpandArgs),
    /// Solve a dimension polynomial; print root, value, and certificate.
    Dims(dims::DimsArgs),
    /// Tabulate k(n), λ_n, λ_n/n for a schedule and estimate its density.
    Schedule(schedule::ScheduleArgs),
    /// Draw seeded samples from a digit measure into CSV.
    Sample(sample::SampleArgs),
    /// Compare an empirical box-count slope against the closed-form value.
    Estimate(estimate::EstimateArgs),
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        // results are thread-count independent by construction; this only
        // bounds resource use
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Expand(args) => expand::run(args),
        Command::Dims(args) => dims::run(args),
        Command::Schedule(args) => schedule::run(args, &cli.out_dir),
        Command::Sample(args) => sample::run(args, &cli.out_dir),
        Command::Estimate(args) => estimate::run(args, &cli.out_dir),
    }
}

/// Restore the default `SIGPIPE` disposition (the Rust runtime ignores it),
/// so `dyadim … | head` terminates quietly like any other filter instead of
/// panicking on a closed stdout.
#[cfg(unix)]
fn reset_sigpipe() {
    // SAFETY: installing SIG_DFL removes a handler rather than adding one.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
