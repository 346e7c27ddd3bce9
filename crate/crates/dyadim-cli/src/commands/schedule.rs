//! `dyadim schedule` — tabulate `(n, k(n), λ_n)` for a schedule, estimate
//! its forcing density, and optionally plot the profile.

use std::path::{Path, PathBuf};

use clap::Args;
use dyadim::schedule::{bounded_deviation, mu_profile};

use crate::resolve::ScheduleFlags;
use crate::{output, svg};

#[derive(Debug, Args)]
pub struct ScheduleArgs {
    #[command(flatten)]
    pub schedule: ScheduleFlags,

    /// Forcing density μ for the quadratic builtin.
    #[arg(long)]
    pub mu: Option<f64>,

    /// Tabulate n = 1..=n_max free digits.
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,

    /// Profile CSV path, resolved under --out-dir.
    #[arg(long, default_value = "profile.csv")]
    pub out: PathBuf,

    /// Also write an SVG plot of λ_n/n.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

pub fn run(args: &ScheduleArgs, out_dir: &Path) -> anyhow::Result<()> {
    let schedule = args.schedule.resolve(args.mu)?;
    let profile = mu_profile(schedule.as_ref(), args.n_max)?;
    let out = output::resolve_out(out_dir, &args.out)?;
    output::write_profile_csv(&out, &profile)?;

    println!("schedule = {}", schedule.descriptor());
    println!("n_max = {}", args.n_max);
    println!("mu_estimate = {}", profile.estimate);
    // deviation is measured against the exact density when one exists,
    // otherwise against the finite-window estimate
    let reference = schedule.analytic_mu().unwrap_or(profile.estimate);
    if let Some(exact) = schedule.analytic_mu() {
        println!("mu_analytic = {exact}");
    }
    let dev = bounded_deviation(schedule.as_ref(), reference, args.n_max)?;
    println!(
        "min |lambda_n - n*mu| = {} at n = {}",
        dev.min_deviation, dev.argmin
    );
    println!("wrote {} rows to {}", profile.rows.len(), out.display());

    if let Some(svg_file) = &args.svg {
        let svg_path = output::resolve_out(out_dir, svg_file)?;
        svg::profile_svg(&svg_path, &profile, schedule.analytic_mu())?;
        println!("wrote profile plot to {}", svg_path.display());
    }
    Ok(())
}
