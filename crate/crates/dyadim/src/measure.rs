//! Product measures on digit sequences: the self-similar measures that
//! witness the dimension values, plus Lebesgue measure via its digit law.
//!
//! Every measure here is a product over digit positions: position `i`
//! carries a probability weight `w(i, j)` for digit `j`, and the measure of
//! a depth-`n` cylinder is `Π_{i≤n} w(i, d_i)`. Four families:
//!
//! * **Lebesgue** — under uniform `x` the digits are i.i.d. with
//!   `P(d = j) = 2^{-j}`: each branch `(2^{-j}, 2^{-j+1}]` maps affinely
//!   onto `(0, 1]` with slope `2^j`, so digits forget everything.
//! * **`ν_A(M)`** (digits ≥ M) — `w(j) = 2^{-jD}` for `j ≥ M` with
//!   `D = alpha(M)`; the defining identity `Σ_{j≥M} 2^{-jD} = 1` makes
//!   these probabilities. The measure gives every depth-`n` cylinder mass
//!   `|V|^D`, which is what makes it exact-dimensional with dimension `D`.
//! * **`ν_B(M)`** (digits ≤ M) — `w(j) = 2^{-jD}` for `1 ≤ j ≤ M` with
//!   `D = beta(M)`; normalization is the multinacci identity
//!   `Σ_{j=1}^{M} 2^{-jD} = 1`.
//! * **`ν̂(M, I, f)` and `ν̄(M, μ, I, f)`** (scheduled) — forced positions
//!   carry their digit with probability 1; free positions get the `ν_B`
//!   weights (`ν̂`, for density-zero schedules) or the tilted weights
//!   `w(j) = 2^{-D(μ+j)}` with `D = gamma_M(μ, M)` (`ν̄`), normalized by
//!   the identity `2^{-Dμ} Σ_{j=1}^{M} 2^{-jD} = 1`.
//!
//! The `ν_B`/`ν̄` weight tables are *not* renormalized: their sums equal 1
//! by the defining polynomial identities (checked to ~1e−15 in tests), and
//! keeping `log₂ w(j) = −jD` (resp. `−D(μ+j)`) exact in that form is what
//! makes the local-dimension ratios algebraic identities rather than
//! approximations. `ν_A` has unbounded support and must be truncated: the
//! geometric tail is cut once its mass drops below [`TAIL_RESIDUAL`] and
//! the kept weights are renormalized.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::dims::{self, DimError, DimValue};
use crate::schedule::{Schedule, ScheduleError};

/// Tail mass at which the unbounded `ν_A` digit law is truncated before
/// renormalization. Far below anything 10⁵–10⁶ samples can resolve.
pub const TAIL_RESIDUAL: f64 = 1e-9;

/// Errors from measure construction or weight queries.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MeasureError {
    /// Invalid dimension-formula parameters (M, μ, tol).
    #[error(transparent)]
    Dim(#[from] DimError),
    /// Schedule query failure.
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
}

/// Which measure family a [`MeasureSpec`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    /// Uniform measure on `(0, 1]`, via the geometric digit law.
    Lebesgue,
    /// Self-similar measure on the digits-≥-M set.
    NuA,
    /// Self-similar measure on the digits-≤-M set.
    NuB,
    /// `ν_B` weights on free positions, forced digits elsewhere.
    NuHat,
    /// Tilted weights on free positions, forced digits elsewhere.
    NuBar,
}

/// A fully materialized digit measure: kind, parameters, optional schedule,
/// and the per-digit weight table for free positions.
#[derive(Debug, Clone)]
pub struct MeasureSpec {
    kind: MeasureKind,
    m: Option<u32>,
    mu: Option<f64>,
    dim: Option<DimValue>,
    schedule: Option<Arc<dyn Schedule>>,
    /// Smallest free digit with positive weight.
    digit_lo: u32,
    /// `weights[t]` is the probability of free digit `digit_lo + t`;
    /// empty for the Lebesgue kind (unbounded law, sampled exactly).
    weights: Vec<f64>,
    /// `log₂ weights[t]`, kept in closed form where one exists.
    log2_weights: Vec<f64>,
    /// Cumulative sums of `weights` for inverse-CDF draws.
    cum: Vec<f64>,
}

impl MeasureSpec {
    /// Lebesgue measure: digits i.i.d. geometric, `P(d = j) = 2^{-j}`.
    pub fn lebesgue() -> Self {
        MeasureSpec {
            kind: MeasureKind::Lebesgue,
            m: None,
            mu: None,
            dim: None,
            schedule: None,
            digit_lo: 1,
            weights: Vec::new(),
            log2_weights: Vec::new(),
            cum: Vec::new(),
        }
    }

    /// `ν_B(M)`: digit `j ∈ 1..=M` with probability `2^{-j·beta(M)}`.
    pub fn nu_b(m: u32, tol: f64) -> Result<Self, MeasureError> {
        let dim = dims::beta(m, tol)?;
        Ok(Self::from_capped_weights(MeasureKind::NuB, m, None, dim))
    }

    /// `ν_A(M)`: digit `j ≥ M` with probability `2^{-j·alpha(M)}`,
    /// truncated at tail mass [`TAIL_RESIDUAL`] and renormalized.
    pub fn nu_a(m: u32, tol: f64) -> Result<Self, MeasureError> {
        let dim = dims::alpha(m, tol)?;
        let d = dim.value;
        // smallest j_max with Σ_{j>j_max} 2^{-jD} = 2^{-(j_max+1)D}/(1−2^{-D})
        // below the residual bound
        let per_digit = (-d).exp2();
        let mut j_max = m;
        let mut tail = per_digit.powi(j_max as i32 + 1) / (1.0 - per_digit);
        while tail >= TAIL_RESIDUAL {
            j_max += 1;
            tail *= per_digit;
        }
        let mut weights: Vec<f64> = (m..=j_max).map(|j| (-d * f64::from(j)).exp2()).collect();
        let total: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= total;
        }
        let log2_weights = weights.iter().map(|w| w.log2()).collect();
        let cum = cumulative(&weights);
        Ok(MeasureSpec {
            kind: MeasureKind::NuA,
            m: Some(m),
            mu: None,
            dim: Some(dim),
            schedule: None,
            digit_lo: m,
            weights,
            log2_weights,
            cum,
        })
    }

    /// `ν̂(M, I, f)`: forced positions carry `f(i)` with probability 1,
    /// free positions get the `ν_B(M)` weights.
    ///
    /// This is the right measure for density-zero schedules, where forcing
    /// costs no dimension and the scheduled set has the full `beta(M)`
    /// dimension.
    pub fn nu_hat(m: u32, schedule: Arc<dyn Schedule>, tol: f64) -> Result<Self, MeasureError> {
        let dim = dims::beta(m, tol)?;
        let mut spec = Self::from_capped_weights(MeasureKind::NuHat, m, None, dim);
        spec.schedule = Some(schedule);
        Ok(spec)
    }

    /// `ν̄(M, μ, I, f)`: forced positions carry `f(i)`, free positions get
    /// the tilted weights `2^{-D(μ+j)}` with `D = gamma_M(μ, M)`.
    ///
    /// The canonical `mu` is the schedule's forcing density (for the
    /// built-ins, [`Schedule::analytic_mu`]); the parameter is explicit so
    /// mismatched choices remain expressible in experiments.
    pub fn nu_bar(
        m: u32,
        mu: f64,
        schedule: Arc<dyn Schedule>,
        tol: f64,
    ) -> Result<Self, MeasureError> {
        let dim = dims::gamma_m(mu, m, tol)?;
        let mut spec = Self::from_capped_weights(MeasureKind::NuBar, m, Some(mu), dim);
        spec.schedule = Some(schedule);
        Ok(spec)
    }

    /// Shared construction for the digit-capped weight tables
    /// `w(j) = 2^{-D(shift + j)}`, `j = 1..=M`, where `shift` is 0 for
    /// `ν_B`/`ν̂` and μ for `ν̄`.
    fn from_capped_weights(kind: MeasureKind, m: u32, mu: Option<f64>, dim: DimValue) -> Self {
        let d = dim.value;
        let shift = mu.unwrap_or(0.0);
        let log2_weights: Vec<f64> = (1..=m).map(|j| -d * (shift + f64::from(j))).collect();
        let weights: Vec<f64> = log2_weights.iter().map(|l| l.exp2()).collect();
        let cum = cumulative(&weights);
        MeasureSpec {
            kind,
            m: Some(m),
            mu,
            dim: Some(dim),
            schedule: None,
            digit_lo: 1,
            weights,
            log2_weights,
            cum,
        }
    }

    /// The measure family.
    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    /// Digit bound M, where the family has one.
    pub fn m(&self) -> Option<u32> {
        self.m
    }

    /// Forcing density μ, for `ν̄`.
    pub fn mu(&self) -> Option<f64> {
        self.mu
    }

    /// The certified dimension value whose weights this measure carries.
    pub fn dim(&self) -> Option<&DimValue> {
        self.dim.as_ref()
    }

    /// The attached schedule, for the hatted/barred kinds.
    pub fn schedule(&self) -> Option<&Arc<dyn Schedule>> {
        self.schedule.as_ref()
    }

    /// Smallest digit a free position can carry.
    pub fn free_digit_lo(&self) -> u32 {
        self.digit_lo
    }

    /// Largest digit a free position can carry; `None` for the unbounded
    /// Lebesgue law.
    pub fn free_digit_hi(&self) -> Option<u32> {
        if self.kind == MeasureKind::Lebesgue {
            None
        } else {
            Some(self.digit_lo + self.weights.len() as u32 - 1)
        }
    }

    /// The forced digit at index `i`, or `None` when `i` is free (always,
    /// for unscheduled kinds).
    pub fn forced_digit_at(&self, i: u64) -> Result<Option<u32>, ScheduleError> {
        match &self.schedule {
            None => Ok(None),
            Some(s) => {
                if s.is_forced(i)? {
                    Ok(Some(s.forced_digit(i)?))
                } else {
                    Ok(None)
                }
            }
        }
    }

    /// Probability of digit `j` at a free position.
    pub fn free_weight(&self, j: u32) -> f64 {
        if self.kind == MeasureKind::Lebesgue {
            return if j == 0 { 0.0 } else { (-f64::from(j)).exp2() };
        }
        if j < self.digit_lo {
            return 0.0;
        }
        self.weights
            .get((j - self.digit_lo) as usize)
            .copied()
            .unwrap_or(0.0)
    }

    /// `log₂` of [`free_weight`], `−∞` outside the support.
    ///
    /// [`free_weight`]: MeasureSpec::free_weight
    pub fn free_log2_weight(&self, j: u32) -> f64 {
        if self.kind == MeasureKind::Lebesgue {
            return if j == 0 {
                f64::NEG_INFINITY
            } else {
                -f64::from(j)
            };
        }
        if j < self.digit_lo {
            return f64::NEG_INFINITY;
        }
        self.log2_weights
            .get((j - self.digit_lo) as usize)
            .copied()
            .unwrap_or(f64::NEG_INFINITY)
    }

    /// Probability of digit `j` at index `i`: 0/1 at forced positions,
    /// [`free_weight`] at free ones.
    ///
    /// [`free_weight`]: MeasureSpec::free_weight
    pub fn weight(&self, i: u64, j: u32) -> Result<f64, ScheduleError> {
        Ok(match self.forced_digit_at(i)? {
            Some(forced) => {
                if j == forced {
                    1.0
                } else {
                    0.0
                }
            }
            None => self.free_weight(j),
        })
    }

    /// Cumulative weight table for inverse-CDF sampling of a free digit;
    /// empty for Lebesgue (sampled by a different, exact mechanism).
    pub(crate) fn cum_weights(&self) -> &[f64] {
        &self.cum
    }

    /// `|Σ_j w(j) − 1|` over the free-digit support. For `ν_B`/`ν̄` this
    /// measures how well the defining polynomial identity was solved; for
    /// `ν_A` it is zero by renormalization.
    pub fn normalization_defect(&self) -> f64 {
        if self.kind == MeasureKind::Lebesgue {
            return 0.0; // Σ 2^{-j} = 1 exactly, no table to defect
        }
        let total: f64 = self.weights.iter().sum();
        (total - 1.0).abs()
    }

    /// Human-readable name for reports and CLI output.
    pub fn label(&self) -> String {
        use alloc::format;
        match self.kind {
            MeasureKind::Lebesgue => "lebesgue".to_string(),
            MeasureKind::NuA => format!("nu_A(M={})", self.m.unwrap_or(0)),
            MeasureKind::NuB => format!("nu_B(M={})", self.m.unwrap_or(0)),
            MeasureKind::NuHat => format!(
                "nu_hat(M={}, {})",
                self.m.unwrap_or(0),
                self.schedule
                    .as_ref()
                    .map_or_else(String::new, |s| s.descriptor())
            ),
            MeasureKind::NuBar => format!(
                "nu_bar(M={}, mu={}, {})",
                self.m.unwrap_or(0),
                self.mu.unwrap_or(f64::NAN),
                self.schedule
                    .as_ref()
                    .map_or_else(String::new, |s| s.descriptor())
            ),
        }
    }
}

fn cumulative(weights: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    weights
        .iter()
        .map(|w| {
            acc += w;
            acc
        })
        .collect()
}
