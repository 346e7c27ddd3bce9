//! The acceptance gate: ten numbered end-to-end checks, each printing one
//! `acceptance NN <name>: PASS` / `FAIL` line (run with `--nocapture` to see
//! the lines for passing checks too). Every tolerance and budget is pinned
//! as a named constant below; nothing is tuned at run time.
//!
//! One clause is expected to fail, deliberately. Check 02 pins the `m = 3`
//! floor-family root to the plastic number (the real root of `x³ = x + 1`,
//! ≈ 1.3247) — a plausible-looking identification that the defining series
//! refutes. Summing the geometric series gives
//!
//! ```text
//! Σ_{i ≥ m} 2^{-D·i} = 2^{-D·m} / (1 − 2^{-D}) = 1
//! ```
//!
//! which at `x = 2^D` is `x^m − x^{m−1} − 1 = 0`. For `m = 3` the positive
//! root is the supergolden ratio ≈ 1.4656 (`x³ = x² + 1`); the plastic
//! number belongs to `m = 5`, where `x⁵ − x⁴ − 1` factors as
//! `(x² − x + 1)(x³ − x − 1)`. The clause is kept, and kept red, as
//! executable documentation that the plastic identification is wrong.
//!
//! Checks 05, 06 and 09 are Monte-Carlo runs; check 10 re-executes all
//! three from scratch and demands byte-identical numbers, so their results
//! are cached in `OnceLock`s the first time around. Wall-clock budgets are
//! asserted under a shared mutex so parallel test threads cannot dilate
//! each other's timings.

use std::sync::{Arc, Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use dyadim::dims::{alpha, beta, gamma_limit, gamma_m, DEFAULT_TOL};
use dyadim::localdim::{cover_sum, local_dimension};
use dyadim::measure::MeasureSpec;
use dyadim::report::{dimension_report, DimensionReport, ReportConfig, TargetSet};
use dyadim::sample::{digit_frequency, draw, max_digit_growth, DigitHistogram, DEFAULT_SEED};
use dyadim::schedule::{k_of, lambda, FileSchedule, PowersOfTwo, Quadratic};
use dyadim::{Schedule, UnitRational};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// -- check 01: exact expansion arithmetic --
const EXACTNESS_POINTS: u32 = 10_000;
const EXACTNESS_DEPTH: usize = 200;
const EXACTNESS_DENOM_MAX: u64 = 1_000_000;
const EXACTNESS_BUDGET: Duration = Duration::from_secs(10);

// -- checks 02-04: closed forms --
const TOL_ROOT: f64 = 1e-10; // roots vs. independent bisection oracles
const TOL_SERIES: f64 = 1e-9; // defining series evaluated at the roots
const TOL_IDENTITY: f64 = 1e-9; // algebraic identities between families
const TOL_LIMIT_AT_64: f64 = 1e-6; // m = 64 proxy for the m → ∞ limit

// -- checks 05-07: box-count slopes --
const TOL_SLOPE: f64 = 0.05; // |slope − theory| for m = 2, 3, 5
const DEEP_FLOOR_SLOPE_CAP: f64 = 0.15; // raw slope bound for A(16)
const SLOPE_BUDGET: Duration = Duration::from_secs(60);

// -- checks 07-08: local dimension along one orbit --
const LOCAL_FREE_DIGITS: u64 = 10_000;
const LOCAL_RECORDS: u64 = 3;
const TOL_LOCAL: f64 = 0.01;
const TOL_COVER: f64 = 1e-9; // Σ length^D over cylinders, at the root
const COVER_ESCAPE: f64 = 1e6; // divergence/vanishing watermark off the root
const TOL_BRUTE: f64 = 1e-9; // closed form vs. explicit enumeration

// -- check 09: Lebesgue digit law --
const LAW_COUNT: u64 = 1_000_000;
const SIGMA_BAND: f64 = 4.0;
const LAW_BUDGET: Duration = Duration::from_secs(60);

/// Serializes the wall-clock-sensitive sections across test threads.
fn timed() -> MutexGuard<'static, ()> {
    static GATE: Mutex<()> = Mutex::new(());
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

/// Prints the one-line verdict and panics on failure.
fn verdict(no: u32, name: &str, failures: Vec<String>, note: &str) {
    if failures.is_empty() {
        if note.is_empty() {
            println!("acceptance {no:02} {name}: PASS");
        } else {
            println!("acceptance {no:02} {name}: PASS ({note})");
        }
    } else {
        let msg = failures.join("; ");
        println!("acceptance {no:02} {name}: FAIL — {msg}");
        panic!("acceptance {no:02} {name}: {msg}");
    }
}

/// 200-step bisection for a root of `f` in `(lo, hi)`, `f(lo) < 0 < f(hi)`.
/// Deliberately independent of the library's solver.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Canonical byte-stable rendering of a report, for the determinism check.
fn report_canon(r: &DimensionReport) -> String {
    let mu = r
        .params
        .mu
        .map_or_else(|| "-".to_string(), |v| format!("{:016x}", v.to_bits()));
    let sched = r.params.schedule.as_deref().unwrap_or("-");
    format!(
        "{} m={} mu={} sched={} th={:016x} emp={:016x} delta={:016x} n={} seed={} k={}..{}",
        r.family,
        r.params.m,
        mu,
        sched,
        r.d_theory.to_bits(),
        r.d_empirical.to_bits(),
        r.delta.to_bits(),
        r.n_samples,
        r.seed,
        r.k_range.0,
        r.k_range.1,
    )
}

struct SlopeRun {
    reports: Vec<DimensionReport>,
    canonical: String,
    elapsed: Duration,
}

fn slope_run(targets: &[TargetSet]) -> SlopeRun {
    let _g = timed();
    let start = Instant::now();
    let cfg = ReportConfig::default();
    let reports: Vec<DimensionReport> = targets
        .iter()
        .map(|t| dimension_report(t, &cfg).expect("report"))
        .collect();
    let elapsed = start.elapsed();
    let canonical = reports
        .iter()
        .map(report_canon)
        .collect::<Vec<_>>()
        .join("\n");
    SlopeRun {
        reports,
        canonical,
        elapsed,
    }
}

fn floor_targets() -> Vec<TargetSet> {
    [2u32, 3, 5, 16]
        .iter()
        .map(|&m| TargetSet::A { m })
        .collect()
}

fn cap_targets() -> Vec<TargetSet> {
    [2u32, 3, 5].iter().map(|&m| TargetSet::B { m }).collect()
}

fn floor_run() -> &'static SlopeRun {
    static RUN: OnceLock<SlopeRun> = OnceLock::new();
    RUN.get_or_init(|| slope_run(&floor_targets()))
}

fn cap_run() -> &'static SlopeRun {
    static RUN: OnceLock<SlopeRun> = OnceLock::new();
    RUN.get_or_init(|| slope_run(&cap_targets()))
}

struct LawRun {
    hists: Vec<DigitHistogram>,
    growth_p: f64,
    canonical: String,
    elapsed: Duration,
}

fn law_run_fresh() -> LawRun {
    let _g = timed();
    let start = Instant::now();
    let spec = MeasureSpec::lebesgue();
    let hists: Vec<DigitHistogram> = [1u64, 5, 20]
        .iter()
        .map(|&i| digit_frequency(&spec, i, LAW_COUNT, DEFAULT_SEED).expect("histogram"))
        .collect();
    let growth = max_digit_growth(LAW_COUNT, &[100], 8, DEFAULT_SEED).expect("growth table");
    let elapsed = start.elapsed();
    let mut canonical = String::new();
    for h in &hists {
        canonical.push_str(&format!("i={} total={}", h.index, h.total));
        for (j, c) in h.entries() {
            canonical.push_str(&format!(" {j}:{c}"));
        }
        canonical.push('\n');
    }
    let growth_p = growth.prob(0, 8);
    canonical.push_str(&format!("growth n=100 K=8 p={:016x}", growth_p.to_bits()));
    LawRun {
        hists,
        growth_p,
        canonical,
        elapsed,
    }
}

fn law_run() -> &'static LawRun {
    static RUN: OnceLock<LawRun> = OnceLock::new();
    RUN.get_or_init(law_run_fresh)
}

/// 10⁴ random rationals `p/q ≤ 1`, `q ≤ 10⁶`: the depth-200 prefix value
/// must bracket the point exactly, `0 < x − value ≤ 2^{-Σdᵢ}`, in rational
/// arithmetic with no tolerance at all.
#[test]
fn criterion_01_expansion_exactness() {
    let gate = timed();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures = Vec::new();
    for _ in 0..EXACTNESS_POINTS {
        let q = rng.random_range(1..=EXACTNESS_DENOM_MAX);
        let p = rng.random_range(1..=q);
        let x = UnitRational::from_u64(p, q).expect("0 < p/q ≤ 1");
        let prefix = x.digit_prefix(EXACTNESS_DEPTH);
        let value = prefix.prefix_value().expect("nonempty prefix");
        let s = prefix.digit_sum();
        let diff = x.as_ratio() - value.as_ratio();
        let bound = BigRational::new(BigInt::one(), BigInt::one() << s);
        if !(diff > BigRational::zero() && diff <= bound) {
            failures.push(format!("residual of {p}/{q} outside (0, 2^-{s}]"));
            break;
        }
    }
    let elapsed = start.elapsed();
    drop(gate);
    if elapsed > EXACTNESS_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {EXACTNESS_BUDGET:?}"));
    }
    verdict(
        1,
        "expansion-exactness",
        failures,
        &format!("{EXACTNESS_POINTS} points, depth {EXACTNESS_DEPTH}, {elapsed:.2?}"),
    );
}

/// Floor-family closed forms: the golden-ratio value at `m = 2`, the series
/// `Σ_{i≥m} 2^{-Di} = 1` at every root, and the deliberately wrong
/// plastic-number pin at `m = 3` (see the module docs — this clause is
/// expected to fail, and the failure message carries the analysis).
#[test]
fn criterion_02_floor_family_roots() {
    let mut failures = Vec::new();

    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let a2 = alpha(2, DEFAULT_TOL).expect("alpha(2)");
    if (a2.value - golden.log2()).abs() > TOL_ROOT {
        failures.push(format!(
            "alpha(2).value {} vs log2(golden) {}",
            a2.value,
            golden.log2()
        ));
    }

    for m in 2..=20u32 {
        let d = alpha(m, DEFAULT_TOL).expect("alpha(m)").value;
        let series = 2f64.powf(-d * f64::from(m)) / (1.0 - 2f64.powf(-d));
        if (series - 1.0).abs() > TOL_SERIES {
            failures.push(format!("series at alpha({m}) sums to {series}"));
        }
    }

    let plastic = bisect(|x| x * x * x - x - 1.0, 1.0, 2.0);
    let a3 = alpha(3, DEFAULT_TOL).expect("alpha(3)").root;
    if (a3 - plastic).abs() > TOL_ROOT {
        failures.push(format!(
            "alpha(3).root = {a3} is the supergolden ratio (x³ = x² + 1), not the \
             plastic number {plastic} (x³ = x + 1): the defining series \
             Σ_{{i≥3}} 2^(-Di) = 2^(-3D)/(1 - 2^(-D)) = 1 forces x³ - x² - 1 = 0 \
             at x = 2^D; the plastic number belongs to m = 5, where x⁵ - x⁴ - 1 \
             factors as (x² - x + 1)(x³ - x - 1). Kept red deliberately: the \
             plastic identification is mathematically unsatisfiable"
        ));
    }

    verdict(2, "floor-family-roots", failures, "");
}

/// Cap-family closed forms: the `m = 2` cap and floor polynomials coincide,
/// the `m = 3` root is the tribonacci constant, and the normalization
/// `Σ_{j=1..m} 2^{-jD} = 1` holds at every root.
#[test]
fn criterion_03_cap_family_roots() {
    let mut failures = Vec::new();

    let a2 = alpha(2, DEFAULT_TOL).expect("alpha(2)").value;
    let b2 = beta(2, DEFAULT_TOL).expect("beta(2)").value;
    if (a2 - b2).abs() > TOL_ROOT {
        failures.push(format!("beta(2) {b2} vs alpha(2) {a2}"));
    }

    let tribonacci = bisect(|x| x * x * x - x * x - x - 1.0, 1.0, 2.0);
    let b3 = beta(3, DEFAULT_TOL).expect("beta(3)").root;
    if (b3 - tribonacci).abs() > TOL_ROOT {
        failures.push(format!("beta(3).root {b3} vs tribonacci {tribonacci}"));
    }

    for m in 2..=20u32 {
        let d = beta(m, DEFAULT_TOL).expect("beta(m)").value;
        let series: f64 = (1..=m).map(|j| 2f64.powf(-d * f64::from(j))).sum();
        if (series - 1.0).abs() > TOL_SERIES {
            failures.push(format!("normalization at beta({m}) sums to {series}"));
        }
    }

    verdict(3, "cap-family-roots", failures, "");
}

/// Scheduled-family identities: the tilted normalization
/// `2^{-Dμ} Σ_{j=1..m} 2^{-jD} = 1` at every `(μ, m)` root, the reciprocal
/// law `gamma_limit(μ).root · alpha(μ+1).root = 1`, and the `m = 64` cap as
/// a 10⁻⁶-accurate stand-in for the `m → ∞` limit.
#[test]
fn criterion_04_scheduled_family_identities() {
    let mut failures = Vec::new();

    for mu in 0..=3u32 {
        for m in 2..=10u32 {
            let d = gamma_m(f64::from(mu), m, DEFAULT_TOL)
                .expect("gamma_m")
                .value;
            let series: f64 = (1..=m).map(|j| 2f64.powf(-d * f64::from(j))).sum();
            let lhs = 2f64.powf(-d * f64::from(mu)) * series;
            if (lhs - 1.0).abs() > TOL_IDENTITY {
                failures.push(format!("tilted normalization at (mu={mu}, m={m}): {lhs}"));
            }
        }
    }

    for mu in 1..=10u32 {
        let g = gamma_limit(f64::from(mu), DEFAULT_TOL)
            .expect("gamma_limit")
            .root;
        let a = alpha(mu + 1, DEFAULT_TOL).expect("alpha(mu+1)").root;
        if (g * a - 1.0).abs() > TOL_IDENTITY {
            failures.push(format!("reciprocal law at mu={mu}: {g} · {a} = {}", g * a));
        }
    }

    for mu in 0..=3u32 {
        let at_64 = gamma_m(f64::from(mu), 64, DEFAULT_TOL)
            .expect("gamma_m(mu, 64)")
            .value;
        let lim = gamma_limit(f64::from(mu), DEFAULT_TOL)
            .expect("gamma_limit")
            .value;
        if (at_64 - lim).abs() > TOL_LIMIT_AT_64 {
            failures.push(format!("m=64 vs limit at mu={mu}: {at_64} vs {lim}"));
        }
    }

    verdict(4, "scheduled-family-identities", failures, "");
}

/// Box-count slopes of 10⁵ floor-family samples match `−log₂` of the root
/// for `m ∈ {2, 3, 5}`. At `m = 16` every point sits below `2^{-15}`, so
/// the desk-scale window `k ≤ 14` sees a single box and a near-zero slope;
/// the check pins that coarse-scale reading instead.
#[test]
fn criterion_05_floor_family_box_dimension() {
    let run = floor_run();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for rep in &run.reports[..3] {
        worst = worst.max(rep.delta);
        if rep.delta > TOL_SLOPE {
            failures.push(format!(
                "A({}) slope {:.4} vs {:.4}",
                rep.params.m, rep.d_empirical, rep.d_theory
            ));
        }
    }
    let deep = &run.reports[3];
    if deep.d_empirical.abs() >= DEEP_FLOOR_SLOPE_CAP {
        failures.push(format!("A(16) coarse slope {:.4}", deep.d_empirical));
    }
    if run.elapsed > SLOPE_BUDGET {
        failures.push(format!("took {:?}, budget {SLOPE_BUDGET:?}", run.elapsed));
    }
    verdict(
        5,
        "floor-family-box-dimension",
        failures,
        &format!(
            "worst delta {:.4}, A(16) slope {:.4}, {:.2?}",
            worst, deep.d_empirical, run.elapsed
        ),
    );
}

/// Box-count slopes of 10⁵ cap-family samples match `−log₂` of the root
/// for `m ∈ {2, 3, 5}`.
#[test]
fn criterion_06_cap_family_box_dimension() {
    let run = cap_run();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for rep in &run.reports {
        worst = worst.max(rep.delta);
        if rep.delta > TOL_SLOPE {
            failures.push(format!(
                "B({}) slope {:.4} vs {:.4}",
                rep.params.m, rep.d_empirical, rep.d_theory
            ));
        }
    }
    verdict(
        6,
        "cap-family-box-dimension",
        failures,
        &format!("worst delta {:.4}, {:.2?}", worst, run.elapsed),
    );
}

/// Density-zero forcing keeps the cap dimension. Along one ν̂(8, powers-of-two)
/// orbit the mass/length ratio at 10⁴ free digits is within 0.01 of the cap
/// value (the forced digits cost `λ_n = Σe = 91` bits of length and no mass,
/// a deficit of ≈ 0.0045); and box counts of scheduled samples forced only at
/// indices {16, 32, 64} — beyond the counting window — still fit the cap slope.
#[test]
fn criterion_07_schedule_preserves_cap_dimension() {
    let mut failures = Vec::new();

    let sched: Arc<dyn Schedule> = Arc::new(PowersOfTwo::new());
    let depth = k_of(sched.as_ref(), LOCAL_FREE_DIGITS).expect("k(n)");
    let spec = MeasureSpec::nu_hat(8, Arc::clone(&sched), DEFAULT_TOL).expect("nu_hat(8)");
    let d_cap = beta(8, DEFAULT_TOL).expect("beta(8)").value;
    let records = draw(&spec, depth as u32, LOCAL_RECORDS, DEFAULT_SEED).expect("draw");
    let mut worst_dev = 0.0f64;
    for rec in &records {
        let seq = local_dimension(rec, &spec).expect("conforming record");
        let last = seq.rows.last().expect("nonempty");
        assert_eq!(last.n, LOCAL_FREE_DIGITS, "free-digit count at depth k(n)");
        let dev = (seq.limit_estimate - d_cap).abs();
        worst_dev = worst_dev.max(dev);
        if dev > TOL_LOCAL {
            failures.push(format!(
                "nu_hat(8) ratio {:.6} vs beta(8) {:.6}",
                seq.limit_estimate, d_cap
            ));
        }
    }

    let gate = timed();
    let cfg = ReportConfig::default();
    let mut worst_delta = 0.0f64;
    for m in [2u32, 3] {
        let sched = FileSchedule::parse_str("16 1\n32 1\n64 1", "doubling-16")
            .expect("three-line schedule");
        let rep = dimension_report(
            &TargetSet::ScheduledB {
                m,
                schedule: Arc::new(sched),
                mu: 0.0,
            },
            &cfg,
        )
        .expect("scheduled report");
        worst_delta = worst_delta.max(rep.delta);
        if rep.delta > TOL_SLOPE {
            failures.push(format!(
                "scheduled B({m}) slope {:.4} vs {:.4}",
                rep.d_empirical, rep.d_theory
            ));
        }
    }
    drop(gate);

    verdict(
        7,
        "schedule-preserves-cap-dimension",
        failures,
        &format!("worst ratio dev {worst_dev:.4}, worst slope delta {worst_delta:.4}"),
    );
}

/// Positive-density forcing pays dimension. For the quadratic schedules with
/// `μ ∈ {1, 2}` and cap 2: the ν̄ ratio at 10⁴ free digits is within 0.01 of
/// the `(μ, 2)` root value; the cylinder cover sum `Σ length^D` equals 1 to
/// 10⁻⁹ at every zero-deviation depth, diverges below the root and vanishes
/// above it; and the closed form matches brute-force enumeration over all
/// `2ⁿ` digit strings for `n ≤ 8`.
#[test]
fn criterion_08_positive_density_spectrum() {
    let mut failures = Vec::new();
    let tri = |i: u64| i * (i + 1) / 2;

    for mu in [1u32, 2] {
        let mu_f = f64::from(mu);
        let sched: Arc<dyn Schedule> = Arc::new(Quadratic::new(mu).expect("mu ≥ 1"));
        let d = gamma_m(mu_f, 2, DEFAULT_TOL).expect("gamma_m(mu, 2)").value;

        let depth = k_of(sched.as_ref(), LOCAL_FREE_DIGITS).expect("k(n)");
        let spec = MeasureSpec::nu_bar(2, mu_f, Arc::clone(&sched), DEFAULT_TOL).expect("nu_bar");
        let records = draw(&spec, depth as u32, LOCAL_RECORDS, DEFAULT_SEED).expect("draw");
        for rec in &records {
            let seq = local_dimension(rec, &spec).expect("conforming record");
            assert_eq!(seq.rows.last().expect("nonempty").n, LOCAL_FREE_DIGITS);
            if (seq.limit_estimate - d).abs() > TOL_LOCAL {
                failures.push(format!(
                    "nu_bar(2, mu={mu}) ratio {:.6} vs gamma value {:.6}",
                    seq.limit_estimate, d
                ));
            }
        }

        // λ_n = μn exactly at triangular depths, so the cover sum sits at 1.
        for i in 1..=31u64 {
            let cs = cover_sum(2, sched.as_ref(), mu_f, d, tri(i)).expect("cover sum");
            if (cs.value - 1.0).abs() > TOL_COVER {
                failures.push(format!(
                    "cover sum at root, mu={mu}, n={}: {}",
                    tri(i),
                    cs.value
                ));
            }
        }
        let below = cover_sum(2, sched.as_ref(), mu_f, d - 0.01, tri(100)).expect("cover sum");
        let above = cover_sum(2, sched.as_ref(), mu_f, d + 0.01, tri(100)).expect("cover sum");
        if below.value < COVER_ESCAPE {
            failures.push(format!(
                "no divergence below root, mu={mu}: {}",
                below.value
            ));
        }
        if above.value > 1.0 / COVER_ESCAPE {
            failures.push(format!("no vanishing above root, mu={mu}: {}", above.value));
        }

        // Brute force: walk every digit string in {1, 2}^n with an odometer.
        for n in 1..=8u64 {
            let lam = lambda(sched.as_ref(), n).expect("lambda");
            let mut digits = vec![1u32; n as usize];
            let mut total = 0.0f64;
            loop {
                let s: u64 = digits.iter().map(|&x| u64::from(x)).sum();
                total += (-d * (lam + s) as f64).exp2();
                let mut pos = 0;
                while pos < digits.len() && digits[pos] == 2 {
                    digits[pos] = 1;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
                digits[pos] = 2;
            }
            let cs = cover_sum(2, sched.as_ref(), mu_f, d, n).expect("cover sum");
            let rel = ((total - cs.value) / cs.value).abs();
            if rel > TOL_BRUTE {
                failures.push(format!(
                    "brute force at mu={mu}, n={n}: {total} vs {}",
                    cs.value
                ));
            }
        }
    }

    verdict(8, "positive-density-spectrum", failures, "");
}

/// Lebesgue digit law at 10⁶ samples: the digit at positions 1, 5 and 20 is
/// geometric (`P(d = j) = 2^{-j}`) within four binomial standard deviations
/// for `j ≤ 8`, and `P(max_{i≤100} dᵢ ≥ 8)` matches `1 − (127/128)^100`.
#[test]
fn criterion_09_lebesgue_digit_law() {
    let run = law_run();
    let mut failures = Vec::new();
    let mut worst_z = 0.0f64;
    for h in &run.hists {
        for j in 1..=8u32 {
            let p = 2f64.powi(-(j as i32));
            let sigma = (p * (1.0 - p) / LAW_COUNT as f64).sqrt();
            let z = (h.freq(j) - p).abs() / sigma;
            worst_z = worst_z.max(z);
            if z > SIGMA_BAND {
                failures.push(format!(
                    "freq(d_{} = {j}) = {:.6} vs {p:.6} is {z:.2}σ off",
                    h.index,
                    h.freq(j)
                ));
            }
        }
    }
    let p_true = 1.0 - (127f64 / 128.0).powi(100);
    let sigma = (p_true * (1.0 - p_true) / LAW_COUNT as f64).sqrt();
    let z = (run.growth_p - p_true).abs() / sigma;
    worst_z = worst_z.max(z);
    if z > SIGMA_BAND {
        failures.push(format!(
            "P(max ≥ 8 in 100) = {:.6} vs {p_true:.6} is {z:.2}σ off",
            run.growth_p
        ));
    }
    if run.elapsed > LAW_BUDGET {
        failures.push(format!("took {:?}, budget {LAW_BUDGET:?}", run.elapsed));
    }
    verdict(
        9,
        "lebesgue-digit-law",
        failures,
        &format!("worst |z| {worst_z:.2}, {:.2?}", run.elapsed),
    );
}

/// Re-executes the three Monte-Carlo runs (05, 06, 09) from scratch with the
/// same seed and demands bit-identical numbers — every float compared by its
/// raw bit pattern, every count exactly.
#[test]
fn criterion_10_determinism() {
    let mut failures = Vec::new();

    let floor_again = slope_run(&floor_targets());
    if floor_again.canonical != floor_run().canonical {
        failures.push("floor-family rerun differed".to_string());
    }
    let cap_again = slope_run(&cap_targets());
    if cap_again.canonical != cap_run().canonical {
        failures.push("cap-family rerun differed".to_string());
    }
    let law_again = law_run_fresh();
    if law_again.canonical != law_run().canonical {
        failures.push("digit-law rerun differed".to_string());
    }

    verdict(
        10,
        "determinism",
        failures,
        "floor, cap and digit-law runs re-executed bit-identically",
    );
}
