//! Box-counting dimension estimation on `(0, 1]`.
//!
//! The estimator counts occupied dyadic boxes at a ladder of scales and
//! regresses the log-counts on the scale exponent: if `N_k` boxes of width
//! `2^{-k}` are hit, the box dimension is the growth rate of `log₂ N_k` in
//! `k`, read off as an ordinary least-squares slope over a scale window.
//!
//! Boxes are *left-open*, matching the cylinder convention of
//! [`crate::expansion`]: the box with index `b` at scale `k` is
//! `(b·2^{-k}, (b+1)·2^{-k}]`, so a point `x` lands in box
//! `⌈x·2^k⌉ − 1`. For points off the dyadic lattice this is the familiar
//! `⌊x·2^k⌋`; the difference only shows at lattice points, where the
//! left-open reading keeps `x = 1` in range (box `2^k − 1`) and agrees with
//! the half-open cylinders the samples came from. The product `x·2^k` is
//! exact in `f64` (scaling by a power of two), so box indices carry no
//! rounding ambiguity.
//!
//! Box dimension is used here as a proxy for Hausdorff dimension. That is
//! legitimate for the sets this crate targets — self-similar attractors
//! (and their scheduled subsets) satisfying the open set condition, where
//! the two dimensions coincide — and would not be for arbitrary sets.
//!
//! Two practical effects bound the usable scale window from above:
//! *saturation* (once `2^k` approaches the sample count, `N_k` flattens at
//! the number of samples; flagged via [`BoxCountResult::saturated`]) and
//! *truncation* (samples are cylinder midpoints at finite depth; callers
//! should sample deep enough that `2^{-depth}` is far below `2^{-k_max}`).

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

/// Largest supported scale exponent: boxes of width `2^{-40}` are already
/// far below `f64` sampling granularity for this crate's uses.
pub const MAX_SCALE: u32 = 40;

/// How far outside `[0, 1]` a regression slope may fall before it is
/// reported as-is instead of clamped (covers pure rounding noise only).
pub const SLOPE_CLAMP_TOL: f64 = 1e-9;

/// Errors from box counting.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoxCountError {
    /// No points to count.
    #[error("box counting needs at least one point")]
    EmptyInput,
    /// The scale window must satisfy `1 ≤ k_min < k_max ≤ 40`.
    #[error("invalid scale window [{k_min}, {k_max}]: need 1 <= k_min < k_max <= {MAX_SCALE}")]
    BadScaleWindow {
        /// Requested lower scale.
        k_min: u32,
        /// Requested upper scale.
        k_max: u32,
    },
    /// A point fell outside the unit interval.
    #[error("point {0} is outside (0, 1]")]
    PointOutOfRange(f64),
}

/// Occupied-box counts across a scale window and the fitted slope.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxCountResult {
    /// Scale exponents `k` (boxes of width `2^{-k}`), ascending.
    pub scales: Vec<u32>,
    /// Occupied-box counts `N_k`, aligned with `scales`.
    pub counts: Vec<u64>,
    /// Least-squares slope of `log₂ N_k` against `k`.
    pub slope: f64,
    /// Root-mean-square residual of the fit, in `log₂` units.
    pub residual: f64,
    /// Whether the finest scale is *saturated*: `N_{k_max}` exceeds a
    /// tenth of the sample count, so the top of the window reflects sample
    /// size rather than geometry and the slope is biased low.
    pub saturated: bool,
}

/// Box index of `x` at scale `k` under the left-open convention.
fn box_index(x: f64, k: u32) -> u64 {
    // x · 2^k is exact: multiplying by a power of two only shifts the
    // exponent, and k ≤ 40 keeps the product finite
    let scaled = x * (1u64 << k) as f64;
    scaled.ceil() as u64 - 1
}

/// Counts occupied dyadic boxes of widths `2^{-k}`, `k = k_min..=k_max`,
/// and fits `log₂ N_k` against `k` by ordinary least squares.
///
/// With the `parallel` feature the per-scale index pass runs on a thread
/// pool; the counts are a deduplicated set size, so scheduling cannot
/// affect the result.
pub fn box_count(points: &[f64], k_min: u32, k_max: u32) -> Result<BoxCountResult, BoxCountError> {
    if points.is_empty() {
        return Err(BoxCountError::EmptyInput);
    }
    if k_min < 1 || k_min >= k_max || k_max > MAX_SCALE {
        return Err(BoxCountError::BadScaleWindow { k_min, k_max });
    }
    for &x in points {
        if !(x > 0.0 && x <= 1.0) {
            return Err(BoxCountError::PointOutOfRange(x));
        }
    }

    let scales: Vec<u32> = (k_min..=k_max).collect();
    let counts: Vec<u64> = scales.iter().map(|&k| occupied_boxes(points, k)).collect();

    let xs: Vec<f64> = scales.iter().map(|&k| f64::from(k)).collect();
    let ys: Vec<f64> = counts.iter().map(|&n| (n as f64).log2()).collect();
    let (slope, residual) = least_squares(&xs, &ys);
    let slope = clamp_to_unit(slope);

    let saturated = *counts.last().expect("window nonempty") > points.len() as u64 / 10;

    Ok(BoxCountResult {
        scales,
        counts,
        slope,
        residual,
        saturated,
    })
}

fn occupied_boxes(points: &[f64], k: u32) -> u64 {
    let mut indices: Vec<u64>;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        indices = points.par_iter().map(|&x| box_index(x, k)).collect();
        indices.par_sort_unstable();
    }
    #[cfg(not(feature = "parallel"))]
    {
        indices = points.iter().map(|&x| box_index(x, k)).collect();
        indices.sort_unstable();
    }
    indices.dedup();
    indices.len() as u64
}

/// OLS slope and RMS residual of `y` on `x`.
fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let mut ss = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss += r * r;
    }
    (slope, (ss / n).sqrt())
}

/// Pulls a slope within [`SLOPE_CLAMP_TOL`] of the unit interval onto it;
/// anything further out is genuine and reported unchanged.
fn clamp_to_unit(slope: f64) -> f64 {
    if (-SLOPE_CLAMP_TOL..0.0).contains(&slope) {
        0.0
    } else if slope > 1.0 && slope <= 1.0 + SLOPE_CLAMP_TOL {
        1.0
    } else {
        slope
    }
}
