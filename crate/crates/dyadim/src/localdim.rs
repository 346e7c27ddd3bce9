//! Local dimensions of the digit measures, and the cover-sum functional
//! that certifies the scheduled-set dimension from above.
//!
//! The *local dimension* of a measure at a point is the limit of
//! `log μ(ball) / log |ball|`; for product digit measures the natural balls
//! are the cylinders of the point's own expansion, giving the ratio
//!
//! ```text
//! ratio_n = log₂ μ(cylinder after n free digits) / log₂ |cylinder|
//! ```
//!
//! Both logs are exactly computable here. The mass is the sum of free-digit
//! log-weights ([`crate::sample::SampleRecord::log2_mass`] tracks the full
//! record; this module rebuilds the per-prefix partial sums), and the
//! length of the cylinder through the `n`-th free digit is
//! `2^{-(s₁+⋯+s_n+λ_n)}` — the free digit sum plus the forced weight `λ_n`
//! from the schedule.
//!
//! For the unscheduled measure on the digit-capped set the ratio is not
//! merely convergent, it is *constant*: mass `2^{-D·Σs}` over length
//! `2^{-Σs}` gives exactly `D` at every depth and every point. Schedules
//! perturb this: with weights `2^{-D(μ+j)}` the ratio becomes
//!
//! ```text
//! ratio_n = D · (Σs + nμ) / (Σs + λ_n),
//! ```
//!
//! which converges to `D` exactly when `λ_n/n → μ` — the forcing-density
//! bookkeeping from [`crate::schedule`] is the whole story.
//!
//! The *cover sum* is the other half of the dimension argument: the
//! `D`-dimensional cost of the depth-`n` cylinder cover of a scheduled
//! digit-capped set,
//!
//! ```text
//! Σ |V̂(s₁,…,s_n)|^D = 2^{-Dλ_n} (2^{-D} + 2^{-2D} + ⋯ + 2^{-MD})ⁿ,
//! ```
//!
//! computed in log space. At `D` solving `x^μ(x + ⋯ + x^M) = 1` the inner
//! sum equals `2^{Dμ}`, so `log₂` of the cover sum collapses to
//! `−D(λ_n − nμ)` — exactly zero along depths where the deviation
//! vanishes, and drifting to `∓∞` when `D` is perturbed up or down. That
//! sign flip is the numerical shadow of `D` being the true dimension.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::measure::MeasureSpec;
use crate::sample::SampleRecord;
use crate::schedule::{lambda, Schedule, ScheduleError};

/// Errors from local-dimension walks and cover sums.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LocalDimError {
    /// The record's digit contradicts the schedule the measure carries.
    #[error("digit {found} at index {index} contradicts the forced digit {expected}")]
    ScheduleMismatch {
        /// 1-based digit index.
        index: u64,
        /// What the schedule forces there.
        expected: u32,
        /// What the record carries.
        found: u32,
    },
    /// The record's digit has weight zero under the measure, so the
    /// cylinder mass (and the ratio) is not defined.
    #[error("digit {digit} at index {index} has zero weight under this measure")]
    UnsupportedDigit {
        /// 1-based digit index.
        index: u64,
        /// The offending digit.
        digit: u32,
    },
    /// All positions were forced; no free digit, no ratio.
    #[error("record has no free digits to form a local-dimension ratio")]
    NoFreeDigits,
    /// Digit caps below 2 have no cover geometry.
    #[error("M must be >= 2 (got {0})")]
    DegenerateM(u32),
    /// The cover sum is a `D`-dimensional cost; `D` must lie in `(0, 1]`.
    #[error("dimension exponent must lie in (0, 1] (got {0})")]
    DimensionOutOfRange(f64),
    /// Depths are 1-based.
    #[error("depth n must be >= 1")]
    ZeroDepth,
    /// Forcing densities are nonnegative reals.
    #[error("mu must be finite and >= 0 (got {0})")]
    InvalidMu(f64),
    /// Schedule query failure.
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
}

/// One step of a local-dimension sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalDimRow {
    /// Number of free digits consumed.
    pub n: u64,
    /// `log₂ mass / log₂ length` of the cylinder through the `n`-th free
    /// digit.
    pub ratio: f64,
}

/// The local-dimension ratios of one record, free digit by free digit.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalDimSequence {
    /// Rows for `n = 1..` up to the record's free-digit count.
    pub rows: Vec<LocalDimRow>,
    /// The deepest ratio — the finite-depth stand-in for the limit.
    pub limit_estimate: f64,
}

/// Walks a record against the measure that generated it, emitting the
/// ratio after each free digit.
///
/// The record must actually conform to `spec`: forced positions are
/// verified against the schedule ([`LocalDimError::ScheduleMismatch`]
/// otherwise), and every free digit must be in the measure's support.
pub fn local_dimension(
    record: &SampleRecord,
    spec: &MeasureSpec,
) -> Result<LocalDimSequence, LocalDimError> {
    let mut rows = Vec::with_capacity(record.digits.len());
    let mut digit_sum: u64 = 0; // over all positions: free digits + λ
    let mut log2_mass = 0.0f64; // over free positions only
    let mut n = 0u64;
    for (pos, &d) in record.digits.digits().iter().enumerate() {
        let index = pos as u64 + 1;
        digit_sum += u64::from(d);
        match spec.forced_digit_at(index)? {
            Some(expected) => {
                if d != expected {
                    return Err(LocalDimError::ScheduleMismatch {
                        index,
                        expected,
                        found: d,
                    });
                }
                // forced positions carry probability 1: no mass term
            }
            None => {
                let w = spec.free_log2_weight(d);
                if w == f64::NEG_INFINITY {
                    return Err(LocalDimError::UnsupportedDigit { index, digit: d });
                }
                log2_mass += w;
                n += 1;
                rows.push(LocalDimRow {
                    n,
                    ratio: -log2_mass / digit_sum as f64,
                });
            }
        }
    }
    let last = rows.last().ok_or(LocalDimError::NoFreeDigits)?;
    let limit_estimate = last.ratio;
    Ok(LocalDimSequence {
        rows,
        limit_estimate,
    })
}

/// The cover sum at one depth, in log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverSum {
    /// Depth in free digits.
    pub n: u64,
    /// Forced weight `λ_n` at that depth.
    pub lambda_n: u64,
    /// `log₂` of the cover sum — the numerically meaningful quantity.
    pub log2_value: f64,
    /// The cover sum itself, `2^log2_value`; saturates to `0`/`∞` once the
    /// exponent leaves `f64` range, which is precisely the divergence the
    /// quantity exists to witness.
    pub value: f64,
    /// `λ_n − n·mu`, the deviation from exact-density forcing. At the
    /// dimension solving the `(mu, M)` balance equation,
    /// `log2_value = −D · deviation` identically.
    pub deviation: f64,
}

/// `Σ |V̂|^D` over all depth-`n` digit choices `1..=M`: the `D`-cost
/// `2^{-D·λ_n} (Σ_{j=1}^{M} 2^{-jD})ⁿ` of the scheduled cylinder cover.
pub fn cover_sum(
    m: u32,
    schedule: &dyn Schedule,
    mu: f64,
    d: f64,
    n: u64,
) -> Result<CoverSum, LocalDimError> {
    if m < 2 {
        return Err(LocalDimError::DegenerateM(m));
    }
    if !(d > 0.0 && d <= 1.0) {
        return Err(LocalDimError::DimensionOutOfRange(d));
    }
    if !mu.is_finite() || mu < 0.0 {
        return Err(LocalDimError::InvalidMu(mu));
    }
    if n == 0 {
        return Err(LocalDimError::ZeroDepth);
    }
    let lambda_n = lambda(schedule, n)?;
    let digit_sum: f64 = (1..=m).map(|j| (-d * f64::from(j)).exp2()).sum();
    let log2_value = -d * lambda_n as f64 + n as f64 * digit_sum.log2();
    Ok(CoverSum {
        n,
        lambda_n,
        log2_value,
        value: log2_value.exp2(),
        deviation: lambda_n as f64 - n as f64 * mu,
    })
}
