//! `dyadim sample` — draw seeded records from a digit measure into CSV.

use std::path::{Path, PathBuf};

use clap::Args;
use dyadim::sample::{draw, DEFAULT_SEED};

use crate::output;
use crate::resolve::{resolve_measure, MeasureArg, ScheduleFlags};

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Which measure to draw from.
    #[arg(long)]
    pub measure: MeasureArg,

    /// Digit floor (nuA) or digit cap (nuB, nuHat, nuBar).
    #[arg(long = "M")]
    pub m: Option<u32>,

    /// Density parameter μ: the nuBar weight tilt, and the quadratic
    /// builtin's forcing density.
    #[arg(long)]
    pub mu: Option<f64>,

    #[command(flatten)]
    pub schedule: ScheduleFlags,

    /// Digits per record.
    #[arg(long)]
    pub depth: u32,

    /// Number of records.
    #[arg(long)]
    pub count: u64,

    /// RNG seed; identical flags and seed give identical output bytes.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Root-solving tolerance behind the measure weights.
    #[arg(long, default_value_t = dyadim::dims::DEFAULT_TOL)]
    pub tol: f64,

    /// Output CSV path, resolved under --out-dir.
    #[arg(long, default_value = "sample.csv")]
    pub out: PathBuf,
}

pub fn run(args: &SampleArgs, out_dir: &Path) -> anyhow::Result<()> {
    let spec = resolve_measure(args.measure, args.m, args.mu, &args.schedule, args.tol)?;
    let records = draw(&spec, args.depth, args.count, args.seed)?;
    let out = output::resolve_out(out_dir, &args.out)?;
    output::write_sample_csv(&out, &records)?;
    println!("measure = {}", spec.label());
    println!("seed = {}", args.seed);
    println!("wrote {} records to {}", records.len(), out.display());
    Ok(())
}
