//! Seeded sampling of digit sequences from the measures in
//! [`crate::measure`], exact in both the digits and the bookkeeping.
//!
//! Points of the digit-constrained sets are generated by drawing their
//! digit sequences directly — position by position, with forced positions
//! taking their scheduled digit and free positions drawn from the
//! measure's weight table — and then materializing the exact prefix value
//! through [`crate::expansion`]. Drawing digits rather than iterating an
//! IFS chaos game keeps successive samples independent and makes the
//! per-sample cylinder mass available in closed form.
//!
//! # Determinism and parallelism
//!
//! Record `r` of a run `(spec, depth, count, seed)` uses its own ChaCha8
//! stream: the generator is keyed by `seed` and set to stream number `r`.
//! Forced positions consume no randomness. Consequently every record is a
//! pure function of `(spec, depth, seed, r)`, the output order is the
//! record order, and serial and parallel runs (the `parallel` feature
//! splits records across a thread pool) are bit-identical.
//!
//! The Lebesgue digit law is sampled exactly: a digit is `z + 1` where `z`
//! is the number of leading zero bits of a uniform `u64` (redrawn on the
//! all-zero word, adding 64 per redraw), which realizes `P(d = j) = 2^{-j}`
//! with no floating-point involvement. Weight-table kinds use one uniform
//! `f64` per digit against the cumulative table.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expansion::{DigitPrefix, UnitRational};
use crate::measure::{MeasureKind, MeasureSpec};
use crate::schedule::ScheduleError;

/// Default sampling seed; every CLI path that does not say otherwise uses
/// this, so repeated runs agree byte for byte.
pub const DEFAULT_SEED: u64 = 42;

/// Errors from sampling runs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    /// Records must contain at least one digit.
    #[error("sample depth must be >= 1")]
    ZeroDepth,
    /// A run must draw at least one record.
    #[error("sample count must be >= 1")]
    ZeroCount,
    /// The growth table needs at least one depth.
    #[error("depth list must not be empty")]
    EmptyDepthList,
    /// Digit positions beyond `u32::MAX` are not samplable.
    #[error("digit index {0} is too deep to sample")]
    DepthTooLarge(u64),
    /// Schedule query failure (e.g. a file schedule shorter than `depth`).
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
}

/// One sampled digit sequence with its exact value and measure bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    /// The drawn digits, forced positions included.
    pub digits: DigitPrefix,
    /// Exact prefix value — the left endpoint of the record's cylinder.
    pub value: UnitRational,
    /// Cylinder midpoint as the nearest `f64`; the float handed to box
    /// counting.
    pub midpoint: f64,
    /// `log₂` of the cylinder's mass under the generating measure:
    /// the sum of `log₂ w(d_i)` over free positions (forced positions have
    /// weight 1 and contribute nothing).
    pub log2_mass: f64,
}

/// The generator for record `record_index`: ChaCha8 keyed by `seed`, on
/// its own stream.
fn record_rng(base: &ChaCha8Rng, record_index: u64) -> ChaCha8Rng {
    let mut rng = base.clone();
    rng.set_stream(record_index);
    rng
}

/// Exact geometric digit `P(d = j) = 2^{-j}` from uniform bits.
fn geometric_digit(rng: &mut ChaCha8Rng) -> u32 {
    let mut base = 0u32;
    loop {
        let word = rng.next_u64();
        if word != 0 {
            return base + word.leading_zeros() + 1;
        }
        // all 64 bits zero: the digit exceeds base + 64, keep going
        base += 64;
    }
}

/// Inverse-CDF draw from the measure's free-digit table.
fn weighted_digit(spec: &MeasureSpec, rng: &mut ChaCha8Rng) -> u32 {
    let u: f64 = rng.random();
    let cum = spec.cum_weights();
    let mut idx = 0usize;
    while idx + 1 < cum.len() && u >= cum[idx] {
        idx += 1;
    }
    spec.free_digit_lo() + idx as u32
}

fn free_digit(spec: &MeasureSpec, rng: &mut ChaCha8Rng) -> u32 {
    if spec.kind() == MeasureKind::Lebesgue {
        geometric_digit(rng)
    } else {
        weighted_digit(spec, rng)
    }
}

/// Draws the digits of one record, without materializing values.
fn record_digits(
    spec: &MeasureSpec,
    depth: u32,
    base: &ChaCha8Rng,
    record_index: u64,
) -> Result<(Vec<u32>, f64), SampleError> {
    let mut rng = record_rng(base, record_index);
    let mut digits = Vec::with_capacity(depth as usize);
    let mut log2_mass = 0.0;
    for i in 1..=u64::from(depth) {
        match spec.forced_digit_at(i)? {
            Some(d) => digits.push(d),
            None => {
                let d = free_digit(spec, &mut rng);
                log2_mass += spec.free_log2_weight(d);
                digits.push(d);
            }
        }
    }
    Ok((digits, log2_mass))
}

fn one_record(
    spec: &MeasureSpec,
    depth: u32,
    base: &ChaCha8Rng,
    record_index: u64,
) -> Result<SampleRecord, SampleError> {
    let (digits, log2_mass) = record_digits(spec, depth, base, record_index)?;
    let digits = DigitPrefix::new(digits).expect("drawn digits are >= 1");
    let value = digits.prefix_value().expect("depth >= 1");
    let midpoint = digits.cylinder().expect("depth >= 1").midpoint_f64();
    Ok(SampleRecord {
        digits,
        value,
        midpoint,
        log2_mass,
    })
}

/// Draws `count` records of `depth` digits from `spec`.
///
/// Deterministic given `(spec, depth, count, seed)`; see the module docs
/// for the per-record stream splitting that keeps parallel and serial
/// runs identical.
pub fn draw(
    spec: &MeasureSpec,
    depth: u32,
    count: u64,
    seed: u64,
) -> Result<Vec<SampleRecord>, SampleError> {
    if depth == 0 {
        return Err(SampleError::ZeroDepth);
    }
    if count == 0 {
        return Err(SampleError::ZeroCount);
    }
    let base = ChaCha8Rng::seed_from_u64(seed);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..count)
            .into_par_iter()
            .map(|r| one_record(spec, depth, &base, r))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count)
            .map(|r| one_record(spec, depth, &base, r))
            .collect()
    }
}

/// Empirical distribution of the digit at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitHistogram {
    /// The digit position that was sampled.
    pub index: u64,
    /// Number of records drawn.
    pub total: u64,
    counts: BTreeMap<u32, u64>,
}

impl DigitHistogram {
    /// Occurrences of digit `j`.
    pub fn count(&self, j: u32) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// Empirical frequency of digit `j`.
    pub fn freq(&self, j: u32) -> f64 {
        self.count(j) as f64 / self.total as f64
    }

    /// The observed digits and their counts, ascending.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&j, &c)| (j, c))
    }
}

/// Samples the digit at position `index` across `count` records.
///
/// Uses the same per-record streams as [`draw`], so the histogram matches
/// what a full `draw` at depth ≥ `index` would show at that position.
pub fn digit_frequency(
    spec: &MeasureSpec,
    index: u64,
    count: u64,
    seed: u64,
) -> Result<DigitHistogram, SampleError> {
    if index == 0 {
        return Err(SampleError::ZeroDepth);
    }
    if count == 0 {
        return Err(SampleError::ZeroCount);
    }
    let depth = u32::try_from(index).map_err(|_| SampleError::DepthTooLarge(index))?;
    let base = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for r in 0..count {
        let (digits, _) = record_digits(spec, depth, &base, r)?;
        *counts.entry(digits[index as usize - 1]).or_insert(0) += 1;
    }
    Ok(DigitHistogram {
        index,
        total: count,
        counts,
    })
}

/// Table of `P(max_{i≤n} d_i ≥ K)` under Lebesgue measure.
///
/// The closed form is `1 − (1 − 2^{-(K−1)})ⁿ` by the i.i.d. geometric
/// digit law; the table holds the empirical fractions.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthTable {
    /// The depths `n`, in the caller's order.
    pub depths: Vec<u32>,
    /// Largest threshold tabulated.
    pub k_max: u32,
    /// `rows[t][K−1]` = empirical `P(max_{i ≤ depths[t]} d_i ≥ K)`.
    rows: Vec<Vec<f64>>,
}

impl GrowthTable {
    /// Empirical `P(max_{i ≤ depths[depth_idx]} d_i ≥ k)`.
    pub fn prob(&self, depth_idx: usize, k: u32) -> f64 {
        self.rows[depth_idx][(k - 1) as usize]
    }

    /// All rows, aligned with `depths`.
    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }
}

/// Estimates `P(max_{i≤n} d_i ≥ K)` under Lebesgue for each `n` in
/// `depths` and each `K = 1..=k_max`, from `count` records.
///
/// Each record is drawn once to the largest depth with a running maximum,
/// so the table is monotone in `n` by construction, record by record —
/// not merely in expectation.
pub fn max_digit_growth(
    count: u64,
    depths: &[u32],
    k_max: u32,
    seed: u64,
) -> Result<GrowthTable, SampleError> {
    if count == 0 {
        return Err(SampleError::ZeroCount);
    }
    if depths.is_empty() {
        return Err(SampleError::EmptyDepthList);
    }
    if depths.contains(&0) || k_max == 0 {
        return Err(SampleError::ZeroDepth);
    }
    let max_depth = *depths.iter().max().expect("nonempty");
    let base = ChaCha8Rng::seed_from_u64(seed);
    // exceed_counts[t][K-1]: records whose max digit within depths[t] is ≥ K
    let mut exceed_counts = alloc::vec![alloc::vec![0u64; k_max as usize]; depths.len()];
    for r in 0..count {
        let mut rng = record_rng(&base, r);
        let mut running_max = 0u32;
        // max over i ≤ d for every queried depth d, in one pass
        let mut max_at_depth = alloc::vec![0u32; depths.len()];
        for i in 1..=max_depth {
            running_max = running_max.max(geometric_digit(&mut rng));
            for (t, &d) in depths.iter().enumerate() {
                if d == i {
                    max_at_depth[t] = running_max;
                }
            }
        }
        for (t, &m) in max_at_depth.iter().enumerate() {
            let reach = m.min(k_max) as usize;
            for slot in exceed_counts[t].iter_mut().take(reach) {
                *slot += 1;
            }
        }
    }
    let rows = exceed_counts
        .into_iter()
        .map(|row| row.into_iter().map(|c| c as f64 / count as f64).collect())
        .collect();
    Ok(GrowthTable {
        depths: depths.to_vec(),
        k_max,
        rows,
    })
}
