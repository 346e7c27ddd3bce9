//! End-to-end dimension reports: sample a target family, box-count the
//! sample, and compare the regression slope against the closed-form value.
//!
//! This is deliberately thin orchestration over [`crate::measure`],
//! [`crate::sample`], [`crate::boxdim`], and [`crate::dims`]. Its one
//! substantive job is picking budgets that make the comparison fair:
//!
//! * **Depth vs. scale.** Sampled points are cylinder midpoints, so the
//!   sample is exact only down to width `2^{-min digit sum}`. Every digit
//!   is at least 1, so forcing `depth ≥ k_max + 7` keeps the truncation
//!   error at least 6 octaves below the finest counting scale.
//! * **Scale vs. count.** Box counts saturate once `2^k` approaches the
//!   sample count; [`BoxCountResult::saturated`] flags fits that leaned on
//!   such scales. The defaults (`10⁵` points, `k ∈ [4, 14]`) stay clear.
//!
//! Box dimension stands in for Hausdorff dimension here because every
//! target family is built from a self-similar attractor with the open-set
//! condition, where the two coincide; see [`crate::boxdim`] for the caveat
//! in full.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::boxdim::{box_count, BoxCountError, BoxCountResult};
use crate::dims::{self, DimError, DEFAULT_TOL};
use crate::measure::{MeasureError, MeasureSpec};
use crate::sample::{draw, SampleError, DEFAULT_SEED};
use crate::schedule::Schedule;

/// A target family to estimate: which set, which parameters.
#[derive(Debug, Clone)]
pub enum TargetSet {
    /// All digits at least `m`: dimension `log₂ α_m`.
    A {
        /// Digit floor, `m ≥ 2`.
        m: u32,
    },
    /// All digits at most `m`: dimension `log₂ β_m`.
    B {
        /// Digit cap, `m ≥ 2`.
        m: u32,
    },
    /// Digit cap plus an index schedule forcing digits along `I`.
    ScheduledB {
        /// Digit cap at free indices, `m ≥ 2`.
        m: u32,
        /// The forcing schedule.
        schedule: Arc<dyn Schedule>,
        /// Forcing density `μ(I, f)`; `0` selects the full-dimension
        /// regime (theory `log₂ β_m`), positive values the scheduled
        /// spectrum value `−log₂` of the `(μ, m)` root.
        mu: f64,
    },
}

/// Sampling and regression budgets for a report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportConfig {
    /// Number of sampled points.
    pub count: u64,
    /// Digit depth per point; raised to `k_max + 7` if set lower.
    pub depth: u32,
    /// Coarsest scale exponent of the regression window.
    pub k_min: u32,
    /// Finest scale exponent of the regression window.
    pub k_max: u32,
    /// RNG seed; reports are pure functions of `(target, config)`.
    pub seed: u64,
    /// Root-solving tolerance for the theoretical value.
    pub tol: f64,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            count: 100_000,
            depth: 60,
            k_min: 4,
            k_max: 14,
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
        }
    }
}

/// The parameters a report was run with, as they appear in the output.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReportParams {
    /// Digit floor/cap.
    pub m: u32,
    /// Forcing density, scheduled families only.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub mu: Option<f64>,
    /// Schedule descriptor, scheduled families only.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub schedule: Option<String>,
}

/// A theoretical-vs-empirical dimension comparison.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DimensionReport {
    /// `"A"`, `"B"`, or `"B(I,f)"`.
    pub family: String,
    /// Parameters the run used.
    pub params: ReportParams,
    /// Closed-form dimension from the defining polynomial.
    #[cfg_attr(feature = "serde", serde(rename = "D_theory"))]
    pub d_theory: f64,
    /// Box-count regression slope of the sample.
    #[cfg_attr(feature = "serde", serde(rename = "D_empirical"))]
    pub d_empirical: f64,
    /// `|D_theory − D_empirical|`.
    pub delta: f64,
    /// Sample count.
    pub n_samples: u64,
    /// RNG seed.
    pub seed: u64,
    /// Regression window `(k_min, k_max)`.
    pub k_range: (u32, u32),
}

/// Everything that can go wrong assembling a report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReportError {
    /// Root solving failed.
    #[error(transparent)]
    Dim(#[from] DimError),
    /// Measure construction failed.
    #[error(transparent)]
    Measure(#[from] MeasureError),
    /// Sampling failed.
    #[error(transparent)]
    Sample(#[from] SampleError),
    /// Box counting failed.
    #[error(transparent)]
    Box(#[from] BoxCountError),
}

fn resolve(
    target: &TargetSet,
    tol: f64,
) -> Result<(String, ReportParams, crate::dims::DimValue, MeasureSpec), ReportError> {
    match target {
        TargetSet::A { m } => Ok((
            String::from("A"),
            ReportParams {
                m: *m,
                mu: None,
                schedule: None,
            },
            dims::alpha(*m, tol)?,
            MeasureSpec::nu_a(*m, tol)?,
        )),
        TargetSet::B { m } => Ok((
            String::from("B"),
            ReportParams {
                m: *m,
                mu: None,
                schedule: None,
            },
            dims::beta(*m, tol)?,
            MeasureSpec::nu_b(*m, tol)?,
        )),
        TargetSet::ScheduledB { m, schedule, mu } => {
            // zero forcing density keeps the full dimension of the capped
            // set; positive density lands on the scheduled spectrum value
            let (dim, spec) = if *mu == 0.0 {
                (
                    dims::beta(*m, tol)?,
                    MeasureSpec::nu_hat(*m, schedule.clone(), tol)?,
                )
            } else {
                (
                    dims::gamma_m(*mu, *m, tol)?,
                    MeasureSpec::nu_bar(*m, *mu, schedule.clone(), tol)?,
                )
            };
            Ok((
                String::from("B(I,f)"),
                ReportParams {
                    m: *m,
                    mu: Some(*mu),
                    schedule: Some(schedule.descriptor()),
                },
                dim,
                spec,
            ))
        }
    }
}

/// Runs a full comparison and returns both the report and the underlying
/// box counts (for plotting or inspection).
pub fn dimension_report_detailed(
    target: &TargetSet,
    cfg: &ReportConfig,
) -> Result<(DimensionReport, BoxCountResult), ReportError> {
    let (family, params, dim, spec) = resolve(target, cfg.tol)?;
    let depth = cfg.depth.max(cfg.k_max + 7);
    let records = draw(&spec, depth, cfg.count, cfg.seed)?;
    let points: Vec<f64> = records.iter().map(|r| r.midpoint).collect();
    let boxes = box_count(&points, cfg.k_min, cfg.k_max)?;
    let report = DimensionReport {
        family,
        params,
        d_theory: dim.value,
        d_empirical: boxes.slope,
        delta: (dim.value - boxes.slope).abs(),
        n_samples: cfg.count,
        seed: cfg.seed,
        k_range: (cfg.k_min, cfg.k_max),
    };
    Ok((report, boxes))
}

/// Runs a full comparison, discarding the box-count detail.
pub fn dimension_report(
    target: &TargetSet,
    cfg: &ReportConfig,
) -> Result<DimensionReport, ReportError> {
    dimension_report_detailed(target, cfg).map(|(report, _)| report)
}
