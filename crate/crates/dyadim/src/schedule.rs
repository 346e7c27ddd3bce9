//! Index schedules: infinite sets of *forced* digit positions and the
//! bookkeeping functions `k(n)`, `λ_n`, `μ(I, f)` they induce.
//!
//! A schedule is a pair `(I, f)`: an infinite set `I ⊆ ℕ` of 1-based digit
//! indices with infinite complement, and a map `f` assigning each forced
//! index a digit value ≥ 1. A point is *compatible* with the schedule when
//! its expansion carries digit `f(i)` at every `i ∈ I`; the remaining
//! (free) positions are unconstrained.
//!
//! Three quantities drive all dimension results for scheduled sets:
//!
//! * `k(n)` — the position of the `n`-th free index, i.e. the minimal `k`
//!   with exactly `n` non-forced indices in `{1..k}`;
//! * `λ_n = Σ { f(i) : i ∈ I, i ≤ k(n) }` — the forced digit weight carried
//!   alongside the first `n` free digits;
//! * `μ(I, f) = limsup_n λ_n / n` — the forcing density.
//!
//! The density decides how much dimension the forcing costs: a cylinder on
//! `n` free digits has length `2^{-(s₁+⋯+s_n+λ_n)}`, so the forced weight
//! `λ_n` enters every covering estimate through its ratio to `n`.
//!
//! `μ` is a limsup and not computable from finitely many terms; the profile
//! functions here report exact `k(n)`, `λ_n` rows plus a sup over the tail
//! half-window `[n_max/2, n_max]` as the finite-horizon estimate, and the
//! built-in families additionally expose their analytic density
//! ([`Schedule::analytic_mu`]) where a closed form exists.
//!
//! # Built-in families
//!
//! * [`PowersOfTwo`]: `I = {2, 4, 8, 16, …}`, `f(2^e) = e`. The forced
//!   weight up to `k` is quadratic in `log k`, so `λ_n/n → 0`: forcing is
//!   asymptotically free (`μ = 0`).
//! * [`Quadratic`]: `I = {(i² + 3i − 2)/2 : i ≥ 1} = {1, 4, 8, 13, 19, …}`
//!   (consecutive gaps `i + 2`), `f` at the `i`-th forced index is `μ·i`.
//!   The density is exactly the parameter `μ`, and the deviation
//!   `λ_n − μn` vanishes at every triangular depth `n = i(i+1)/2`.
//! * [`Constant`]: `I = {p, 2p, 3p, …}` with digit `v` everywhere; density
//!   `v/(p−1)`.
//!
//! [`FileSchedule`] supplies `(I, f)` as an explicit sorted list (text
//! lines `index digit`); it describes the schedule only up to the last
//! listed index, and queries past that *horizon* fail rather than guess.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Errors from schedule queries and construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScheduleError {
    /// Digit indices are 1-based.
    #[error("digit indices are 1-based; 0 is not a valid index")]
    ZeroIndex,
    /// Free-digit counts are 1-based.
    #[error("free-digit count n must be >= 1")]
    ZeroCount,
    /// The queried index is free, not forced.
    #[error("index {0} is not forced by this schedule")]
    NotForced(u64),
    /// A finite schedule description cannot answer past its last entry.
    #[error("index {index} is beyond the schedule horizon {horizon}")]
    HorizonExceeded {
        /// The index that was asked about.
        index: u64,
        /// Largest index the schedule can answer for.
        horizon: u64,
    },
    /// The enumerator ran out of listed forced indices.
    #[error("schedule lists only {available} forced indices (requested #{requested})")]
    EnumerationExhausted {
        /// 1-based rank that was requested.
        requested: u64,
        /// Number of forced indices available.
        available: u64,
    },
    /// The requested forced index does not fit in 64 bits.
    #[error("forced index #{0} overflows the index range")]
    IndexOverflow(u64),
    /// A forced digit value does not fit in 32 bits.
    #[error("forced digit at index {0} overflows the digit range")]
    DigitOverflow(u64),
    /// A constant schedule with period 1 would force every index, leaving
    /// no free digits.
    #[error("constant schedule period must be >= 2; period {0} leaves no free indices")]
    DensePeriod(u64),
    /// Forced digits must be expansion digits.
    #[error("forced digit value must be >= 1")]
    ZeroForcedDigit,
    /// The quadratic family's density parameter must be a positive integer.
    #[error("quadratic schedule density must be >= 1")]
    ZeroDensity,
    /// A schedule file line failed to parse.
    #[error("schedule file line {line}: {reason}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        reason: String,
    },
}

/// An index schedule `(I, f)`: membership, forced digits, and the prefix
/// counts/sums that the `k(n)`/`λ_n` bookkeeping needs.
///
/// Implementations must be consistent: `count_forced_up_to` and
/// `forced_digit_sum_up_to` are prefix aggregates of `is_forced` /
/// `forced_digit`. All methods take `&self` and implementations are
/// `Send + Sync`, so schedules can be queried concurrently.
pub trait Schedule: Send + Sync + core::fmt::Debug {
    /// Whether index `i ≥ 1` is forced.
    fn is_forced(&self, i: u64) -> Result<bool, ScheduleError>;

    /// The forced digit `f(i)`, or [`ScheduleError::NotForced`].
    fn forced_digit(&self, i: u64) -> Result<u32, ScheduleError>;

    /// The `j`-th smallest element of `I` (1-based).
    fn forced_index(&self, j: u64) -> Result<u64, ScheduleError>;

    /// `|I ∩ {1..k}|`.
    fn count_forced_up_to(&self, k: u64) -> Result<u64, ScheduleError>;

    /// `Σ { f(i) : i ∈ I, i ≤ k }`.
    fn forced_digit_sum_up_to(&self, k: u64) -> Result<u64, ScheduleError>;

    /// Largest index this schedule can answer for; `None` if unbounded.
    fn horizon(&self) -> Option<u64> {
        None
    }

    /// Closed-form forcing density `μ(I, f)`, where the family has one.
    fn analytic_mu(&self) -> Option<f64> {
        None
    }

    /// Human-readable name for reports and plots.
    fn descriptor(&self) -> String;
}

fn check_index(i: u64) -> Result<(), ScheduleError> {
    if i == 0 {
        Err(ScheduleError::ZeroIndex)
    } else {
        Ok(())
    }
}

/// `I = {2^e : e ≥ 1}`, `f(2^e) = e`.
///
/// Only `log₂ k` indices among the first `k` are forced, and their digit
/// sum is `(log₂ k)(log₂ k + 1)/2`, so `λ_n/n → 0`: this is the standard
/// example of a schedule with forcing density zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowersOfTwo;

impl PowersOfTwo {
    /// The powers-of-two schedule.
    pub fn new() -> Self {
        PowersOfTwo
    }
}

impl Schedule for PowersOfTwo {
    fn is_forced(&self, i: u64) -> Result<bool, ScheduleError> {
        check_index(i)?;
        Ok(i >= 2 && i.is_power_of_two())
    }

    fn forced_digit(&self, i: u64) -> Result<u32, ScheduleError> {
        if self.is_forced(i)? {
            Ok(i.ilog2())
        } else {
            Err(ScheduleError::NotForced(i))
        }
    }

    fn forced_index(&self, j: u64) -> Result<u64, ScheduleError> {
        if j == 0 {
            return Err(ScheduleError::ZeroCount);
        }
        if j >= 64 {
            return Err(ScheduleError::IndexOverflow(j));
        }
        Ok(1u64 << j)
    }

    fn count_forced_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        // powers 2^1 .. 2^⌊log₂ k⌋
        Ok(if k < 2 { 0 } else { u64::from(k.ilog2()) })
    }

    fn forced_digit_sum_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        let e = self.count_forced_up_to(k)?;
        Ok(e * (e + 1) / 2)
    }

    fn analytic_mu(&self) -> Option<f64> {
        Some(0.0)
    }

    fn descriptor(&self) -> String {
        "powers-of-two".to_string()
    }
}

/// `I = {(i² + 3i − 2)/2 : i ≥ 1}`, `f` at the `i`-th forced index `= μ·i`.
///
/// The gaps between consecutive forced indices grow linearly (`i + 2`), so
/// the forced indices thin out just fast enough that the linearly growing
/// forced digits keep `λ_n/n` bounded: the density is exactly `μ`, with
/// deviation `λ_n − μn = 0` at every triangular depth `n = i(i+1)/2`.
#[derive(Debug, Clone, Copy)]
pub struct Quadratic {
    mu: u32,
}

impl Quadratic {
    /// Quadratic schedule with integer density `mu ≥ 1`.
    pub fn new(mu: u32) -> Result<Self, ScheduleError> {
        if mu == 0 {
            return Err(ScheduleError::ZeroDensity);
        }
        Ok(Quadratic { mu })
    }

    /// The density parameter.
    pub fn mu(&self) -> u32 {
        self.mu
    }

    /// Number of forced indices ≤ k: the largest `i` with
    /// `(i² + 3i − 2)/2 ≤ k`, i.e. `⌊(√(17 + 8k) − 3)/2⌋`.
    fn rank(k: u64) -> u64 {
        let s = (17u128 + 8u128 * u128::from(k)).isqrt() as u64;
        s.saturating_sub(3) / 2
    }

    /// The `i`-th forced index, `(i² + 3i − 2)/2`.
    fn element(i: u64) -> Result<u64, ScheduleError> {
        let i = u128::from(i);
        let a = (i * i + 3 * i - 2) / 2;
        u64::try_from(a).map_err(|_| ScheduleError::IndexOverflow(i as u64))
    }
}

impl Schedule for Quadratic {
    fn is_forced(&self, i: u64) -> Result<bool, ScheduleError> {
        check_index(i)?;
        let r = Self::rank(i);
        Ok(r >= 1 && Self::element(r)? == i)
    }

    fn forced_digit(&self, i: u64) -> Result<u32, ScheduleError> {
        if !self.is_forced(i)? {
            return Err(ScheduleError::NotForced(i));
        }
        u32::try_from(u64::from(self.mu) * Self::rank(i))
            .map_err(|_| ScheduleError::DigitOverflow(i))
    }

    fn forced_index(&self, j: u64) -> Result<u64, ScheduleError> {
        if j == 0 {
            return Err(ScheduleError::ZeroCount);
        }
        Self::element(j)
    }

    fn count_forced_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        Ok(Self::rank(k))
    }

    fn forced_digit_sum_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        // μ(1 + 2 + ⋯ + rank)
        let r = Self::rank(k);
        Ok(u64::from(self.mu) * (r * (r + 1) / 2))
    }

    fn analytic_mu(&self) -> Option<f64> {
        Some(f64::from(self.mu))
    }

    fn descriptor(&self) -> String {
        format!("quadratic(mu={})", self.mu)
    }
}

/// `I = {p, 2p, 3p, …}` with the same digit `v` at every forced index.
///
/// One index in every `p` is forced, so `k(n) − n = ⌊k(n)/p⌋` and
/// `λ_n = v·(k(n) − n)` exactly; the density is `v/(p − 1)`.
#[derive(Debug, Clone, Copy)]
pub struct Constant {
    period: u64,
    value: u32,
}

impl Constant {
    /// Every `period`-th index forced to digit `value`; `period ≥ 2`,
    /// `value ≥ 1`.
    pub fn new(period: u64, value: u32) -> Result<Self, ScheduleError> {
        if period < 2 {
            return Err(ScheduleError::DensePeriod(period));
        }
        if value == 0 {
            return Err(ScheduleError::ZeroForcedDigit);
        }
        Ok(Constant { period, value })
    }

    /// The spacing of forced indices.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// The digit forced everywhere.
    pub fn value(&self) -> u32 {
        self.value
    }
}

impl Schedule for Constant {
    fn is_forced(&self, i: u64) -> Result<bool, ScheduleError> {
        check_index(i)?;
        Ok(i % self.period == 0)
    }

    fn forced_digit(&self, i: u64) -> Result<u32, ScheduleError> {
        if self.is_forced(i)? {
            Ok(self.value)
        } else {
            Err(ScheduleError::NotForced(i))
        }
    }

    fn forced_index(&self, j: u64) -> Result<u64, ScheduleError> {
        if j == 0 {
            return Err(ScheduleError::ZeroCount);
        }
        j.checked_mul(self.period)
            .ok_or(ScheduleError::IndexOverflow(j))
    }

    fn count_forced_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        Ok(k / self.period)
    }

    fn forced_digit_sum_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        Ok(u64::from(self.value) * (k / self.period))
    }

    fn analytic_mu(&self) -> Option<f64> {
        Some(f64::from(self.value) / (self.period - 1) as f64)
    }

    fn descriptor(&self) -> String {
        format!("constant(period={}, value={})", self.period, self.value)
    }
}

/// A schedule given by an explicit sorted list of `(index, digit)` pairs.
///
/// This is a *finite description* of a schedule: queries up to the last
/// listed index are exact, and anything past that horizon returns
/// [`ScheduleError::HorizonExceeded`] instead of silently assuming the
/// remaining indices are free.
///
/// The text format is one `index digit` pair per line, indices strictly
/// increasing, both values ≥ 1. Blank lines and `#`-comments are skipped.
#[derive(Debug, Clone)]
pub struct FileSchedule {
    entries: Vec<(u64, u32)>,
    digit_prefix_sums: Vec<u64>,
    name: String,
}

impl FileSchedule {
    /// Parses the `index digit` line format.
    ///
    /// `name` labels the schedule in reports (typically the file path).
    pub fn parse_str(text: &str, name: &str) -> Result<Self, ScheduleError> {
        let mut entries: Vec<(u64, u32)> = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = line_no + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut fields = body.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(ScheduleError::Parse {
                    line,
                    reason: format!("expected `index digit`, got {body:?}"),
                });
            };
            let index: u64 = a.parse().map_err(|_| ScheduleError::Parse {
                line,
                reason: format!("bad index {a:?}"),
            })?;
            let digit: u32 = b.parse().map_err(|_| ScheduleError::Parse {
                line,
                reason: format!("bad digit {b:?}"),
            })?;
            if index == 0 {
                return Err(ScheduleError::Parse {
                    line,
                    reason: "indices are 1-based".to_string(),
                });
            }
            if digit == 0 {
                return Err(ScheduleError::Parse {
                    line,
                    reason: "digits must be >= 1".to_string(),
                });
            }
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(ScheduleError::Parse {
                        line,
                        reason: format!("index {index} not greater than previous {prev}"),
                    });
                }
            }
            entries.push((index, digit));
        }
        if entries.is_empty() {
            return Err(ScheduleError::Parse {
                line: 0,
                reason: "schedule file lists no forced indices".to_string(),
            });
        }
        let mut digit_prefix_sums = Vec::with_capacity(entries.len());
        let mut acc = 0u64;
        for &(_, d) in &entries {
            acc += u64::from(d);
            digit_prefix_sums.push(acc);
        }
        Ok(FileSchedule {
            entries,
            digit_prefix_sums,
            name: name.to_string(),
        })
    }

    fn check_horizon(&self, i: u64) -> Result<(), ScheduleError> {
        let horizon = self.entries.last().expect("nonempty by construction").0;
        if i > horizon {
            Err(ScheduleError::HorizonExceeded { index: i, horizon })
        } else {
            Ok(())
        }
    }

    /// Entries ≤ k, by binary search over the sorted index column.
    fn rank(&self, k: u64) -> usize {
        self.entries.partition_point(|&(i, _)| i <= k)
    }
}

impl Schedule for FileSchedule {
    fn is_forced(&self, i: u64) -> Result<bool, ScheduleError> {
        check_index(i)?;
        self.check_horizon(i)?;
        Ok(self
            .entries
            .binary_search_by_key(&i, |&(idx, _)| idx)
            .is_ok())
    }

    fn forced_digit(&self, i: u64) -> Result<u32, ScheduleError> {
        check_index(i)?;
        self.check_horizon(i)?;
        match self.entries.binary_search_by_key(&i, |&(idx, _)| idx) {
            Ok(pos) => Ok(self.entries[pos].1),
            Err(_) => Err(ScheduleError::NotForced(i)),
        }
    }

    fn forced_index(&self, j: u64) -> Result<u64, ScheduleError> {
        if j == 0 {
            return Err(ScheduleError::ZeroCount);
        }
        let available = self.entries.len() as u64;
        if j > available {
            return Err(ScheduleError::EnumerationExhausted {
                requested: j,
                available,
            });
        }
        Ok(self.entries[(j - 1) as usize].0)
    }

    fn count_forced_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        self.check_horizon(k)?;
        Ok(self.rank(k) as u64)
    }

    fn forced_digit_sum_up_to(&self, k: u64) -> Result<u64, ScheduleError> {
        self.check_horizon(k)?;
        let r = self.rank(k);
        Ok(if r == 0 {
            0
        } else {
            self.digit_prefix_sums[r - 1]
        })
    }

    fn horizon(&self) -> Option<u64> {
        Some(self.entries.last().expect("nonempty by construction").0)
    }

    fn descriptor(&self) -> String {
        format!("file({})", self.name)
    }
}

/// `k(n)`: the position of the `n`-th free index — minimal `k` with exactly
/// `n` non-forced indices in `{1..k}`.
///
/// Computed as the least fixpoint of `k ↦ n + |I ∩ {1..k}|`, starting from
/// `k = n`. The iteration is monotone and lands on a free index: a forced
/// fixpoint `k` would make `k − 1` a smaller fixpoint.
pub fn k_of(schedule: &dyn Schedule, n: u64) -> Result<u64, ScheduleError> {
    if n == 0 {
        return Err(ScheduleError::ZeroCount);
    }
    let mut k = n;
    loop {
        let next = n + schedule.count_forced_up_to(k)?;
        if next == k {
            return Ok(k);
        }
        k = next;
    }
}

/// `λ_n`: the forced digit sum over `I ∩ {1..k(n)}`.
pub fn lambda(schedule: &dyn Schedule, n: u64) -> Result<u64, ScheduleError> {
    let k = k_of(schedule, n)?;
    schedule.forced_digit_sum_up_to(k)
}

/// One row of a schedule profile: the bookkeeping at `n` free digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduleProfile {
    /// Number of free digits.
    pub n: u64,
    /// Position `k(n)` of the `n`-th free index.
    pub k_n: u64,
    /// Forced digit sum `λ_n`.
    pub lambda_n: u64,
}

impl ScheduleProfile {
    /// `λ_n / n`, the finite-depth density.
    pub fn ratio(&self) -> f64 {
        self.lambda_n as f64 / self.n as f64
    }
}

/// A full profile `n = 1..n_max` with the tail-window density estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct MuProfile {
    /// Rows for `n = 1..=n_max`.
    pub rows: Vec<ScheduleProfile>,
    /// `sup { λ_n/n : n ∈ [n_max/2, n_max] }` — a finite-horizon stand-in
    /// for the limsup density.
    pub estimate: f64,
}

/// Internal single-pass walker producing `(n, k(n), λ_n)` rows in order.
///
/// One upward sweep over indices beats `n_max` independent fixpoint
/// solves, and the incremental `λ` uses only `is_forced`/`forced_digit`,
/// keeping file schedules O(horizon · log) overall.
struct ProfileWalk<'a> {
    schedule: &'a dyn Schedule,
    k: u64,
    lambda: u64,
    n: u64,
}

impl<'a> ProfileWalk<'a> {
    fn new(schedule: &'a dyn Schedule) -> Self {
        ProfileWalk {
            schedule,
            k: 0,
            lambda: 0,
            n: 0,
        }
    }

    fn next_row(&mut self) -> Result<ScheduleProfile, ScheduleError> {
        loop {
            self.k += 1;
            if self.schedule.is_forced(self.k)? {
                self.lambda += u64::from(self.schedule.forced_digit(self.k)?);
            } else {
                self.n += 1;
                return Ok(ScheduleProfile {
                    n: self.n,
                    k_n: self.k,
                    lambda_n: self.lambda,
                });
            }
        }
    }
}

/// Profiles `n = 1..=n_max` and estimates the density `μ(I, f)` as the sup
/// of `λ_n/n` over the tail half-window `[n_max/2, n_max]`.
///
/// The limsup itself is not computable from finitely many rows; callers
/// who need the exact density of a built-in family should prefer
/// [`Schedule::analytic_mu`]. The full rows are returned so convergence
/// can be inspected rather than trusted.
pub fn mu_profile(schedule: &dyn Schedule, n_max: u64) -> Result<MuProfile, ScheduleError> {
    if n_max == 0 {
        return Err(ScheduleError::ZeroCount);
    }
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut walk = ProfileWalk::new(schedule);
    for _ in 0..n_max {
        rows.push(walk.next_row()?);
    }
    let window_start = (n_max / 2).max(1);
    let estimate = rows
        .iter()
        .filter(|r| r.n >= window_start)
        .map(ScheduleProfile::ratio)
        .fold(0.0, f64::max);
    Ok(MuProfile { rows, estimate })
}

/// Minimum of `|λ_n − n·mu|` over `n = 1..=n_max`, and the earliest depth
/// attaining it.
///
/// A density `mu` for which this minimum stays bounded (and in the good
/// cases returns to 0 along a subsequence) is what the covering argument
/// for scheduled sets needs; the quadratic family attains 0 at every
/// triangular `n`, while for the powers-of-two family (`mu = 0`) the
/// statistic is `λ_n` itself and grows without bound.
pub fn bounded_deviation(
    schedule: &dyn Schedule,
    mu: f64,
    n_max: u64,
) -> Result<DeviationSummary, ScheduleError> {
    if n_max == 0 {
        return Err(ScheduleError::ZeroCount);
    }
    let mut walk = ProfileWalk::new(schedule);
    let mut best = f64::INFINITY;
    let mut argmin = 1;
    for _ in 0..n_max {
        let row = walk.next_row()?;
        let dev = (row.lambda_n as f64 - row.n as f64 * mu).abs();
        if dev < best {
            best = dev;
            argmin = row.n;
        }
    }
    Ok(DeviationSummary {
        min_deviation: best,
        argmin,
    })
}

/// Result of [`bounded_deviation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationSummary {
    /// Smallest `|λ_n − n·mu|` observed.
    pub min_deviation: f64,
    /// Earliest `n` attaining it.
    pub argmin: u64,
}
