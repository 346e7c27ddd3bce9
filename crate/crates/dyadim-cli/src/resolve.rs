//! Turning flag combinations into schedules and measure specs, shared by
//! the `schedule`, `sample`, and `estimate` subcommands.

use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::ValueEnum;
use dyadim::measure::MeasureSpec;
use dyadim::schedule::{Constant, FileSchedule, PowersOfTwo, Quadratic};
use dyadim::Schedule;

/// Built-in schedule selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuiltinSchedule {
    /// Force index 2^e to digit e (density 0).
    #[value(name = "powers-of-two", alias = "pow2")]
    PowersOfTwo,
    /// Force quadratically spaced indices to digits μ·i (density μ).
    Quadratic,
    /// Force every p-th index to a fixed digit v (density v/(p−1)).
    Constant,
}

/// Schedule-selection flags shared by several subcommands.
#[derive(Debug, clap::Args)]
pub struct ScheduleFlags {
    /// Built-in schedule family.
    #[arg(long)]
    pub builtin: Option<BuiltinSchedule>,

    /// Schedule file: one "index digit" pair per line, indices strictly
    /// ascending, '#' comments allowed.
    #[arg(long, conflicts_with = "builtin")]
    pub schedule_file: Option<PathBuf>,

    /// Period for the constant builtin.
    #[arg(long)]
    pub period: Option<u64>,

    /// Forced digit for the constant builtin.
    #[arg(long)]
    pub value: Option<u32>,
}

impl ScheduleFlags {
    /// Whether any schedule was requested at all.
    pub fn is_some(&self) -> bool {
        self.builtin.is_some() || self.schedule_file.is_some()
    }

    /// Builds the schedule. `mu` is the command's shared `--mu` flag; the
    /// quadratic builtin consumes it as its (integer) forcing density.
    pub fn resolve(&self, mu: Option<f64>) -> anyhow::Result<Arc<dyn Schedule>> {
        match (self.builtin, &self.schedule_file) {
            (Some(BuiltinSchedule::PowersOfTwo), None) => Ok(Arc::new(PowersOfTwo::new())),
            (Some(BuiltinSchedule::Quadratic), None) => {
                let mu = mu.context("--builtin quadratic needs --mu (its forcing density)")?;
                if mu.fract() != 0.0 || !(1.0..=u32::MAX as f64).contains(&mu) {
                    bail!("the quadratic builtin takes a positive integer --mu (got {mu})");
                }
                Ok(Arc::new(Quadratic::new(mu as u32)?))
            }
            (Some(BuiltinSchedule::Constant), None) => {
                let period = self
                    .period
                    .context("--builtin constant needs --period (force every p-th index)")?;
                let value = self
                    .value
                    .context("--builtin constant needs --value (the forced digit)")?;
                Ok(Arc::new(Constant::new(period, value)?))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading schedule file {}", path.display()))?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| String::from("file"));
                Ok(Arc::new(FileSchedule::parse_str(&text, &name)?))
            }
            (None, None) => bail!("no schedule given: use --builtin or --schedule-file"),
            (Some(_), Some(_)) => unreachable!("clap rejects --builtin with --schedule-file"),
        }
    }
}

/// Measure selector for the `sample` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    /// Lebesgue measure on (0, 1]: digit j has probability 2^{-j}.
    Lebesgue,
    /// Natural measure on {digits ≥ M}.
    #[value(name = "nuA", alias = "nu-a")]
    NuA,
    /// Natural measure on {digits ≤ M}.
    #[value(name = "nuB", alias = "nu-b")]
    NuB,
    /// Capped measure with forced digits along a schedule (density-0 use).
    #[value(name = "nuHat", alias = "nu-hat")]
    NuHat,
    /// Scheduled measure with density-μ tilted weights.
    #[value(name = "nuBar", alias = "nu-bar")]
    NuBar,
}

/// Assembles the measure a `sample` run draws from.
pub fn resolve_measure(
    measure: MeasureArg,
    m: Option<u32>,
    mu: Option<f64>,
    flags: &ScheduleFlags,
    tol: f64,
) -> anyhow::Result<MeasureSpec> {
    let need_m = || m.context("--M is required for this measure");
    match measure {
        MeasureArg::Lebesgue => {
            if flags.is_some() {
                bail!("the Lebesgue measure does not take a schedule");
            }
            Ok(MeasureSpec::lebesgue())
        }
        MeasureArg::NuA => Ok(MeasureSpec::nu_a(need_m()?, tol)?),
        MeasureArg::NuB => Ok(MeasureSpec::nu_b(need_m()?, tol)?),
        MeasureArg::NuHat => {
            let schedule = flags.resolve(mu)?;
            Ok(MeasureSpec::nu_hat(need_m()?, schedule, tol)?)
        }
        MeasureArg::NuBar => {
            let schedule = flags.resolve(mu)?;
            let mu = mu
                .or_else(|| schedule.analytic_mu())
                .context("--mu is required for nuBar with a file schedule (no analytic density)")?;
            Ok(MeasureSpec::nu_bar(need_m()?, mu, schedule, tol)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_schedule() -> ScheduleFlags {
        ScheduleFlags {
            builtin: None,
            schedule_file: None,
            period: None,
            value: None,
        }
    }

    #[test]
    fn quadratic_needs_an_integer_mu() {
        let flags = ScheduleFlags {
            builtin: Some(BuiltinSchedule::Quadratic),
            ..no_schedule()
        };
        assert!(flags.resolve(Some(2.0)).is_ok());
        assert!(flags.resolve(None).is_err());
        assert!(flags.resolve(Some(1.5)).is_err());
        assert!(flags.resolve(Some(0.0)).is_err());
    }

    #[test]
    fn constant_needs_period_and_value() {
        let flags = ScheduleFlags {
            builtin: Some(BuiltinSchedule::Constant),
            period: Some(3),
            value: Some(2),
            ..no_schedule()
        };
        let s = flags.resolve(None).unwrap();
        assert_eq!(s.analytic_mu(), Some(1.0));
        let missing = ScheduleFlags {
            builtin: Some(BuiltinSchedule::Constant),
            ..no_schedule()
        };
        assert!(missing.resolve(None).is_err());
    }

    #[test]
    fn nu_bar_defaults_mu_to_the_schedule_density() {
        let flags = ScheduleFlags {
            builtin: Some(BuiltinSchedule::Constant),
            period: Some(2),
            value: Some(3),
            ..no_schedule()
        };
        let spec = resolve_measure(MeasureArg::NuBar, Some(2), None, &flags, 1e-12).unwrap();
        assert_eq!(spec.mu(), Some(3.0));
    }

    #[test]
    fn lebesgue_rejects_schedules() {
        let flags = ScheduleFlags {
            builtin: Some(BuiltinSchedule::PowersOfTwo),
            ..no_schedule()
        };
        assert!(resolve_measure(MeasureArg::Lebesgue, None, None, &flags, 1e-12).is_err());
    }
}
