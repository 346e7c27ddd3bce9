//! Cross-module identities: quantities computed by independent code paths
//! that must agree exactly (or to solver tolerance). These are the joints
//! between the expansion arithmetic, the root solvers, the schedules, the
//! samplers, and the estimators.

use std::sync::Arc;

use dyadim::dims;
use dyadim::localdim::{cover_sum, local_dimension};
use dyadim::measure::MeasureSpec;
use dyadim::sample::draw;
use dyadim::schedule::{lambda, mu_profile, PowersOfTwo, Quadratic};
use dyadim::Schedule;

const TOL: f64 = 1e-12;

/// Sampled digits → exact midpoint → re-expansion recovers the digits.
///
/// The sampler builds the midpoint from the digit tuple; the expansion
/// walks the midpoint back through the map. They traverse the pipeline in
/// opposite directions and must meet in the middle, exactly.
#[test]
fn midpoint_re_expansion_recovers_sampled_digits() {
    let pow2: Arc<dyn dyadim::Schedule> = Arc::new(PowersOfTwo::new());
    let specs = [
        MeasureSpec::lebesgue(),
        MeasureSpec::nu_b(3, TOL).unwrap(),
        MeasureSpec::nu_a(2, TOL).unwrap(),
        MeasureSpec::nu_hat(4, pow2, TOL).unwrap(),
    ];
    for spec in &specs {
        for rec in draw(spec, 30, 20, 99).unwrap() {
            // the midpoint lies in the open interior of the record's
            // cylinder, so its first 30 digits are the record's digits
            let cyl = rec.digits.cylinder().unwrap();
            let mid = dyadim::UnitRational::new(cyl.midpoint()).unwrap();
            let again = mid.digit_prefix(30);
            assert_eq!(again.digits(), rec.digits.digits(), "{}", spec.label());
        }
    }
}

/// The local-dimension ratio of the capped-set measure is the multinacci
/// dimension — not asymptotically, but as an algebraic identity at every
/// depth, because log₂-mass is exactly −D times the digit sum.
#[test]
fn capped_measure_local_dimension_is_the_multinacci_value() {
    for m in [2u32, 3, 5, 8] {
        let spec = MeasureSpec::nu_b(m, TOL).unwrap();
        let d = dims::beta(m, TOL).unwrap().value;
        for rec in draw(&spec, 60, 10, 2024).unwrap() {
            let seq = local_dimension(&rec, &spec).unwrap();
            for row in seq.rows {
                assert!((row.ratio - d).abs() < 10.0 * TOL, "M={m} n={}", row.n);
            }
        }
    }
}

/// Scheduled cover sums collapse to the deviation: at the defining root,
/// log₂ of the cover sum equals −D·(λ_n − nμ) for every depth, tying the
/// root solver to the schedule enumeration through the cover functional.
#[test]
fn cover_sum_equals_deviation_exponential_at_the_root() {
    for mu in [1u32, 2] {
        let schedule = Quadratic::new(mu).unwrap();
        let d = dims::gamma_m(f64::from(mu), 2, TOL).unwrap().value;
        for n in (1..=500u64).step_by(7) {
            let cs = cover_sum(2, &schedule, f64::from(mu), d, n).unwrap();
            assert!(
                (cs.log2_value + d * cs.deviation).abs() < 1e-9,
                "mu={mu} n={n}"
            );
        }
        // and the deviation vanishes exactly at triangular depths
        for i in 1..=31u64 {
            let cs = cover_sum(2, &schedule, f64::from(mu), d, i * (i + 1) / 2).unwrap();
            assert_eq!(cs.deviation, 0.0);
            assert!((cs.value - 1.0).abs() < 1e-9);
        }
    }
}

/// The two-parameter root families meet where they should: the scheduled
/// root at density 0 is the reciprocal multinacci root, and the limit root
/// at density μ is the reciprocal of the floor-family root at μ + 1.
#[test]
fn root_families_are_reciprocal_where_they_overlap() {
    for m in 2..=12u32 {
        let g = dims::gamma_m(0.0, m, TOL).unwrap();
        let b = dims::beta(m, TOL).unwrap();
        assert!((g.root * b.root - 1.0).abs() < 1e-13, "M={m}");
        assert!((g.value - b.value).abs() < 1e-12, "M={m}");
    }
    for mu in 1..=10u32 {
        let g = dims::gamma_limit(f64::from(mu), TOL).unwrap();
        let a = dims::alpha(mu + 1, TOL).unwrap();
        assert!((g.root * a.root - 1.0).abs() < 1e-13, "mu={mu}");
        assert!((g.value - a.value).abs() < 1e-12, "mu={mu}");
    }
}

/// The hatted measure's local-dimension deficit is governed by the
/// schedule profile: D ≥ ratio_n ≥ D·Σd/(Σd + λ_n), with both ends
/// computable from independent modules.
#[test]
fn hatted_ratio_is_squeezed_by_the_profile() {
    let schedule = Arc::new(PowersOfTwo::new());
    let spec = MeasureSpec::nu_hat(2, schedule.clone(), TOL).unwrap();
    let d = dims::beta(2, TOL).unwrap().value;
    // depth covering n = 2000 free digits
    let n = 2000u64;
    let depth = dyadim::schedule::k_of(schedule.as_ref(), n).unwrap();
    let lam = lambda(schedule.as_ref(), n).unwrap();
    for rec in draw(&spec, u32::try_from(depth).unwrap(), 5, 7).unwrap() {
        let seq = local_dimension(&rec, &spec).unwrap();
        let last = seq.rows.last().unwrap();
        assert_eq!(last.n, n);
        assert!(last.ratio < d);
        // free digits are ≥ 1, so Σd ≥ n and the deficit is at most the
        // λ/(n + λ) share of D
        let floor = d * n as f64 / (n + lam) as f64;
        assert!(last.ratio > floor, "{} vs {floor}", last.ratio);
    }
}

/// Forcing density measured by enumeration matches the density the
/// measure/dimension layer assumes analytically.
#[test]
fn enumerated_density_matches_analytic_density() {
    for mu in [1u32, 2, 3] {
        let s = Quadratic::new(mu).unwrap();
        let profile = mu_profile(&s, 20_000).unwrap();
        let analytic = s.analytic_mu().unwrap();
        assert!(
            (profile.estimate - analytic).abs() < 0.01,
            "mu={mu}: {} vs {analytic}",
            profile.estimate
        );
    }
    let s = PowersOfTwo::new();
    let profile = mu_profile(&s, 20_000).unwrap();
    assert!(profile.estimate < 0.02);
    assert_eq!(s.analytic_mu(), Some(0.0));
}

/// End to end: the golden-ratio family on both closed-form and sampled
/// sides. β₂ is (1+√5)/2 on the nose; a fresh 20k-sample box count lands
/// within the coarse empirical tolerance.
#[test]
fn golden_ratio_family_end_to_end() {
    let b = dims::beta(2, TOL).unwrap();
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    assert!((b.root - phi).abs() < 1e-12);
    assert!((b.value - phi.log2()).abs() < 1e-12);

    let report = dyadim::report::dimension_report(
        &dyadim::report::TargetSet::B { m: 2 },
        &dyadim::report::ReportConfig {
            count: 20_000,
            k_max: 12,
            ..Default::default()
        },
    )
    .unwrap();
    assert!((report.d_theory - phi.log2()).abs() < 1e-12);
    assert!(report.delta < 0.05, "delta {}", report.delta);
}
