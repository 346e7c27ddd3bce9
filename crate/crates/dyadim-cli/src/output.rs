//! Output-file plumbing: path resolution under `--out-dir`, CSV writers
//! for samples and schedule profiles, JSON writer for reports.
//!
//! Float columns use Rust's shortest-roundtrip `Display`, so identical
//! runs produce byte-identical files.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use dyadim::report::DimensionReport;
use dyadim::sample::SampleRecord;
use dyadim::schedule::MuProfile;

/// Resolves an output file against the output directory and creates the
/// parent directories. Absolute paths bypass `--out-dir`.
pub fn resolve_out(out_dir: &Path, file: &Path) -> anyhow::Result<PathBuf> {
    let path = if file.is_absolute() {
        file.to_path_buf()
    } else {
        out_dir.join(file)
    };
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .with_context(|| format!("creating {}", parent.display()))?;
        }
    }
    Ok(path)
}

/// Sample CSV: one row per record, digits space-joined, exact value as a
/// numerator/denominator pair.
pub fn write_sample_csv(path: &Path, records: &[SampleRecord]) -> anyhow::Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    w.write_record([
        "depth",
        "digits",
        "value_num",
        "value_den",
        "midpoint_float",
        "log2_mass",
    ])?;
    for rec in records {
        let digits = rec
            .digits
            .digits()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        w.write_record(&[
            rec.digits.len().to_string(),
            digits,
            rec.value.as_ratio().numer().to_string(),
            rec.value.as_ratio().denom().to_string(),
            rec.midpoint.to_string(),
            rec.log2_mass.to_string(),
        ])?;
    }
    w.flush()
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Profile CSV: `n, k_n, lambda_n, ratio` rows.
pub fn write_profile_csv(path: &Path, profile: &MuProfile) -> anyhow::Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    w.write_record(["n", "k_n", "lambda_n", "ratio"])?;
    for row in &profile.rows {
        w.write_record(&[
            row.n.to_string(),
            row.k_n.to_string(),
            row.lambda_n.to_string(),
            row.ratio().to_string(),
        ])?;
    }
    w.flush()
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Report JSON, pretty-printed with a trailing newline.
pub fn write_report_json(path: &Path, report: &DimensionReport) -> anyhow::Result<()> {
    let mut file =
        std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    serde_json::to_writer_pretty(&mut file, report)?;
    file.write_all(b"\n")?;
    Ok(())
}
