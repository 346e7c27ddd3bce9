//! Two static SVG plots, hand-assembled for determinism: the box-count
//! fit (log₂ N_k against k with its regression line) and the schedule
//! density profile (λ_n/n against n).
//!
//! No plotting dependency: the geometry is a handful of lines and circles
//! on a fixed 640×440 canvas, and writing the markup directly keeps the
//! bytes reproducible across runs and platforms.

use std::fmt::Write as _;
use std::path::Path;

use dyadim::boxdim::BoxCountResult;
use dyadim::report::DimensionReport;
use dyadim::schedule::MuProfile;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_T: f64 = 36.0;
const MARGIN_B: f64 = 48.0;

/// Affine map from data range to pixel range.
fn scale(v: f64, lo: f64, hi: f64, px_lo: f64, px_hi: f64) -> f64 {
    if hi == lo {
        return (px_lo + px_hi) / 2.0;
    }
    px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo)
}

struct Canvas {
    body: String,
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Canvas {
    fn new(x_lo: f64, x_hi: f64, y_lo: f64, y_hi: f64, title: &str) -> Self {
        let mut body = String::new();
        let _ = write!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
             viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"monospace\" font-size=\"12\">\n\
             <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n\
             <text x=\"{:.1}\" y=\"20\" text-anchor=\"middle\">{title}</text>\n",
            WIDTH / 2.0
        );
        let mut c = Canvas {
            body,
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        };
        // axes
        let (x0, y0) = (c.px(x_lo), c.py(y_lo));
        let (x1, y1) = (c.px(x_hi), c.py(y_hi));
        let _ = write!(
            c.body,
            "<line x1=\"{x0:.1}\" y1=\"{y0:.1}\" x2=\"{x1:.1}\" y2=\"{y0:.1}\" stroke=\"black\"/>\n\
             <line x1=\"{x0:.1}\" y1=\"{y0:.1}\" x2=\"{x0:.1}\" y2=\"{y1:.1}\" stroke=\"black\"/>\n"
        );
        c
    }

    fn px(&self, x: f64) -> f64 {
        scale(x, self.x_lo, self.x_hi, MARGIN_L, WIDTH - MARGIN_R)
    }

    fn py(&self, y: f64) -> f64 {
        scale(y, self.y_lo, self.y_hi, HEIGHT - MARGIN_B, MARGIN_T)
    }

    fn x_label(&mut self, text: &str) {
        let _ = writeln!(
            self.body,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{text}</text>",
            (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
            HEIGHT - 12.0
        );
    }

    fn y_label(&mut self, text: &str) {
        let x = 18.0;
        let y = (MARGIN_T + HEIGHT - MARGIN_B) / 2.0;
        let _ = writeln!(
            self.body,
            "<text x=\"{x:.1}\" y=\"{y:.1}\" text-anchor=\"middle\" \
             transform=\"rotate(-90 {x:.1} {y:.1})\">{text}</text>"
        );
    }

    fn tick_x(&mut self, v: f64, label: &str) {
        let x = self.px(v);
        let y = self.py(self.y_lo);
        let _ = write!(
            self.body,
            "<line x1=\"{x:.1}\" y1=\"{y:.1}\" x2=\"{x:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n\
             <text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{label}</text>\n",
            y + 5.0,
            y + 20.0
        );
    }

    fn tick_y(&mut self, v: f64, label: &str) {
        let x = self.px(self.x_lo);
        let y = self.py(v);
        let _ = write!(
            self.body,
            "<line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{x:.1}\" y2=\"{y:.1}\" stroke=\"black\"/>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{label}</text>\n",
            x - 5.0,
            x - 8.0,
            y + 4.0
        );
    }

    fn dot(&mut self, x: f64, y: f64) {
        let _ = writeln!(
            self.body,
            "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"3\" fill=\"steelblue\"/>",
            self.px(x),
            self.py(y)
        );
    }

    fn segment(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, color: &str) {
        let _ = writeln!(
            self.body,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" \
             stroke=\"{color}\" stroke-width=\"1.5\"/>",
            self.px(x0),
            self.py(y0),
            self.px(x1),
            self.py(y1)
        );
    }

    fn polyline(&mut self, points: impl Iterator<Item = (f64, f64)>, color: &str) {
        let coords: Vec<String> = points
            .map(|(x, y)| format!("{:.1},{:.1}", self.px(x), self.py(y)))
            .collect();
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            coords.join(" ")
        );
    }

    fn note(&mut self, line: usize, text: &str) {
        let _ = writeln!(
            self.body,
            "<text x=\"{:.1}\" y=\"{:.1}\" fill=\"dimgray\">{text}</text>",
            MARGIN_L + 10.0,
            MARGIN_T + 16.0 + 16.0 * line as f64
        );
    }

    fn finish(mut self, path: &Path) -> anyhow::Result<()> {
        self.body.push_str("</svg>\n");
        std::fs::write(path, self.body)
            .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))
    }
}

/// log₂ N_k against k, with the fitted regression line and the theoretical
/// slope quoted alongside the empirical one.
pub fn boxfit_svg(
    path: &Path,
    boxes: &BoxCountResult,
    report: &DimensionReport,
) -> anyhow::Result<()> {
    let k_lo = f64::from(*boxes.scales.first().expect("nonempty scales"));
    let k_hi = f64::from(*boxes.scales.last().expect("nonempty scales"));
    let logs: Vec<f64> = boxes.counts.iter().map(|&n| (n as f64).log2()).collect();
    let y_hi = logs.iter().cloned().fold(1.0f64, f64::max).ceil();

    let title = format!(
        "box counts: {} (M = {})",
        xml_escape(&report.family),
        report.params.m
    );
    let mut c = Canvas::new(k_lo, k_hi, 0.0, y_hi, &title);
    c.x_label("scale exponent k (box width 2^-k)");
    c.y_label("log2 N_k");
    for &k in &boxes.scales {
        c.tick_x(f64::from(k), &k.to_string());
    }
    let mut y = 0.0;
    while y <= y_hi {
        c.tick_y(y, &format!("{y:.0}"));
        y += (y_hi / 6.0).max(1.0).ceil();
    }

    // fitted line through the mean point with the regression slope
    let n = boxes.scales.len() as f64;
    let k_mean = boxes.scales.iter().map(|&k| f64::from(k)).sum::<f64>() / n;
    let log_mean = logs.iter().sum::<f64>() / n;
    let line_at = |k: f64| log_mean + boxes.slope * (k - k_mean);
    c.segment(k_lo, line_at(k_lo), k_hi, line_at(k_hi), "firebrick");

    for (&k, &l) in boxes.scales.iter().zip(&logs) {
        c.dot(f64::from(k), l);
    }
    c.note(0, &format!("slope = {:.4} (empirical)", boxes.slope));
    c.note(1, &format!("D     = {:.4} (theory)", report.d_theory));
    if boxes.saturated {
        c.note(2, "warning: finest scale saturated");
    }
    c.finish(path)
}

/// λ_n/n against n, with the analytic density drawn as a reference line.
pub fn profile_svg(path: &Path, profile: &MuProfile, analytic: Option<f64>) -> anyhow::Result<()> {
    let n_max = profile.rows.last().map_or(1, |r| r.n);
    let ratio_max = profile
        .rows
        .iter()
        .map(|r| r.ratio())
        .fold(0.0f64, f64::max)
        .max(analytic.unwrap_or(0.0))
        .max(1e-3);
    let y_hi = ratio_max * 1.15;

    let mut c = Canvas::new(0.0, n_max as f64, 0.0, y_hi, "forcing density profile");
    c.x_label("free digits n");
    c.y_label("lambda_n / n");
    for i in 0..=4 {
        let v = n_max as f64 * f64::from(i) / 4.0;
        c.tick_x(v, &format!("{v:.0}"));
        let r = y_hi * f64::from(i) / 4.0;
        c.tick_y(r, &format!("{r:.2}"));
    }
    if let Some(mu) = analytic {
        c.segment(0.0, mu, n_max as f64, mu, "darkseagreen");
        c.note(1, &format!("analytic mu = {mu}"));
    }
    // thin dense profiles: the plot stays faithful at ~1k vertices
    let step = (profile.rows.len() / 1000).max(1);
    c.polyline(
        profile
            .rows
            .iter()
            .step_by(step)
            .map(|r| (r.n as f64, r.ratio())),
        "steelblue",
    );
    c.note(0, &format!("window sup estimate = {:.6}", profile.estimate));
    c.finish(path)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
