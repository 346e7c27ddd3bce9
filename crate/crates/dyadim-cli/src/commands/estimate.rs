//! `dyadim estimate` — sample a target family, box-count the sample, and
//! write a theory-vs-empirics report.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, ValueEnum};
use dyadim::report::{dimension_report_detailed, ReportConfig, TargetSet};
use dyadim::sample::DEFAULT_SEED;

use crate::resolve::ScheduleFlags;
use crate::{output, svg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    /// Digit floor family: all digits ≥ M.
    #[value(name = "A")]
    A,
    /// Digit cap family: all digits ≤ M. Add a schedule for B(I,f).
    #[value(name = "B")]
    B,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Target family.
    #[arg(long)]
    pub family: TargetArg,

    /// Digit floor/cap M.
    #[arg(long = "M")]
    pub m: u32,

    /// Forcing density μ for scheduled targets; defaults to the
    /// schedule's analytic density when it has one.
    #[arg(long)]
    pub mu: Option<f64>,

    #[command(flatten)]
    pub schedule: ScheduleFlags,

    /// Number of sampled points.
    #[arg(long, default_value_t = 100_000)]
    pub count: u64,

    /// Digit depth per point (raised automatically to cover k_max).
    #[arg(long, default_value_t = 60)]
    pub depth: u32,

    /// Coarsest regression scale.
    #[arg(long, default_value_t = 4)]
    pub k_min: u32,

    /// Finest regression scale.
    #[arg(long, default_value_t = 14)]
    pub k_max: u32,

    /// RNG seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Root-solving tolerance for the theoretical value.
    #[arg(long, default_value_t = dyadim::dims::DEFAULT_TOL)]
    pub tol: f64,

    /// Report JSON path, resolved under --out-dir.
    #[arg(long, default_value = "report.json")]
    pub out: PathBuf,

    /// Also write the log₂N_k-vs-k SVG with the fitted line.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

pub fn run(args: &EstimateArgs, out_dir: &Path) -> anyhow::Result<()> {
    let target = match args.family {
        TargetArg::A => {
            if args.schedule.is_some() {
                bail!("family A does not take a schedule");
            }
            TargetSet::A { m: args.m }
        }
        TargetArg::B if args.schedule.is_some() => {
            let schedule = args.schedule.resolve(args.mu)?;
            let mu = args
                .mu
                .or_else(|| schedule.analytic_mu())
                .context("--mu is required with a file schedule (no analytic density)")?;
            TargetSet::ScheduledB {
                m: args.m,
                schedule,
                mu,
            }
        }
        TargetArg::B => TargetSet::B { m: args.m },
    };
    let cfg = ReportConfig {
        count: args.count,
        depth: args.depth,
        k_min: args.k_min,
        k_max: args.k_max,
        seed: args.seed,
        tol: args.tol,
    };
    let (report, boxes) = dimension_report_detailed(&target, &cfg)?;
    let out = output::resolve_out(out_dir, &args.out)?;
    output::write_report_json(&out, &report)?;

    println!("family = {} (M = {})", report.family, report.params.m);
    println!("D_theory = {}", report.d_theory);
    println!("D_empirical = {}", report.d_empirical);
    println!("delta = {}", report.delta);
    if boxes.saturated {
        println!("warning: finest scale saturated (N_k > count/10); slope biased low");
    }
    println!("wrote report to {}", out.display());

    if let Some(svg_file) = &args.svg {
        let svg_path = output::resolve_out(out_dir, svg_file)?;
        svg::boxfit_svg(&svg_path, &boxes, &report)?;
        println!("wrote box plot to {}", svg_path.display());
    }
    Ok(())
}
