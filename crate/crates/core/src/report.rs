//! Report bundle for a batch of game results: results CSV, audit JSON,
//! ratio-versus-size plots (ASCII and SVG) and an environment stamp.
//!
//! Everything except the stamp's timestamp is a pure function of the
//! results, so regenerating from the same runs is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::Coord;
use crate::harness::{audit_claims, AuditRow, GameResult};
use crate::strategies::StrategySpec;

#[derive(Debug, Error)]
#[error("cannot write {path}: {source}")]
pub struct ReportError {
    pub path: PathBuf,
    #[source]
    pub source: std::io::Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvironmentStamp {
    pub version: String,
    pub seed: u64,
    pub timestamp_unix: u64,
}

#[derive(Clone, Debug)]
pub struct ReportBundle {
    pub rows: Vec<AuditRow>,
    pub csv: String,
    pub audit_json: String,
    pub plot_ascii: String,
    pub plot_svg: String,
    pub stamp: EnvironmentStamp,
    /// 0 iff no asserted claim was missed.
    pub exit_code: i32,
}

pub const CSV_HEADER: &str = "strategy,params,algorithm,seed,colors,clique,ratio,verdict";

pub fn render_report(results: &[GameResult], seed: u64) -> ReportBundle {
    let rows: Vec<AuditRow> = results.iter().flat_map(audit_claims).collect();
    let mut csv = format!("{CSV_HEADER}\n");
    for r in results {
        let (family, params) = r.strategy.split_once(':').unwrap_or((r.strategy.as_str(), ""));
        let verdict = &audit_claims(r)[0].verdict;
        let ratio = r.ratio.as_ref().map(Coord::to_string).unwrap_or_default();
        let _ = writeln!(
            csv,
            "{family},\"{params}\",{},{},{},{},{ratio},{verdict}",
            r.algorithm, r.seed, r.colors_used, r.clique
        );
    }
    let audit_json = serde_json::to_string_pretty(&rows).expect("audit rows serialize");
    let series = ratio_series(results);
    let exit_code = i32::from(rows.iter().any(AuditRow::is_failure));
    ReportBundle {
        csv,
        audit_json,
        plot_ascii: ascii_plot(&series),
        plot_svg: svg_plot(&series),
        stamp: EnvironmentStamp {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            timestamp_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        },
        rows,
        exit_code,
    }
}

impl ReportBundle {
    /// Writes `results.csv`, `audit.json`, `plot.txt`, `plot.svg` and
    /// `stamp.json` into `dir`, creating it if needed.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>, ReportError> {
        std::fs::create_dir_all(dir).map_err(|source| ReportError {
            path: dir.to_path_buf(),
            source,
        })?;
        let stamp = serde_json::to_string_pretty(&self.stamp).expect("stamp serializes");
        let files = [
            ("results.csv", self.csv.as_str()),
            ("audit.json", self.audit_json.as_str()),
            ("plot.txt", self.plot_ascii.as_str()),
            ("plot.svg", self.plot_svg.as_str()),
            ("stamp.json", stamp.as_str()),
        ];
        let mut written = Vec::new();
        for (name, body) in files {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|source| ReportError {
                path: path.clone(),
                source,
            })?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Per family, the best ratio seen at each size parameter.
type Series = BTreeMap<String, BTreeMap<usize, f64>>;

fn ratio_series(results: &[GameResult]) -> Series {
    let mut out = Series::new();
    for r in results {
        let (Ok(spec), Some(ratio)) = (r.strategy.parse::<StrategySpec>(), &r.ratio) else {
            continue;
        };
        let slot = out
            .entry(spec.family().to_string())
            .or_default()
            .entry(spec.size_param())
            .or_insert(f64::MIN);
        *slot = slot.max(ratio.to_f64());
    }
    out
}

const MARKS: &[u8] = b"*o+x#@%&";

fn bounds(series: &Series) -> Option<(usize, usize, f64, f64)> {
    let points: Vec<(usize, f64)> = series.values().flat_map(|s| s.iter().map(|(&k, &v)| (k, v))).collect();
    let (kmin, kmax) = (points.iter().map(|p| p.0).min()?, points.iter().map(|p| p.0).max()?);
    // Ratios are at least 1, so the axis always starts at or below 1.
    let ymin = points.iter().map(|p| p.1).fold(1.0, f64::min).floor();
    let ymax = points.iter().map(|p| p.1).fold(1.0, f64::max).ceil();
    Some((kmin, kmax, ymin, ymax))
}

fn ascii_plot(series: &Series) -> String {
    const W: usize = 60;
    const H: usize = 16;
    let Some((kmin, kmax, ymin, ymax)) = bounds(series) else {
        return "no ratios to plot\n".into();
    };
    let mut grid = vec![vec![b' '; W]; H];
    for (i, points) in series.values().enumerate() {
        for (&k, &y) in points {
            let x = if kmax == kmin { W / 2 } else { (k - kmin) * (W - 1) / (kmax - kmin) };
            let row = ((ymax - y) / (ymax - ymin).max(f64::EPSILON) * (H - 1) as f64).round() as usize;
            grid[row.min(H - 1)][x] = MARKS[i % MARKS.len()];
        }
    }
    let mut out = String::from("ratio = colors / clique\n");
    for (r, line) in grid.iter().enumerate() {
        let y = ymax - (ymax - ymin) * r as f64 / (H - 1) as f64;
        let _ = writeln!(out, "{y:6.2} |{}", String::from_utf8_lossy(line).trim_end());
    }
    let _ = writeln!(out, "       +{}", "-".repeat(W));
    let _ = writeln!(out, "        size {kmin} .. {kmax}");
    for (i, family) in series.keys().enumerate() {
        let _ = writeln!(out, "        {} {family}", MARKS[i % MARKS.len()] as char);
    }
    out
}

fn svg_plot(series: &Series) -> String {
    const W: f64 = 480.0;
    const H: f64 = 300.0;
    const PAD: f64 = 40.0;
    const PALETTE: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];
    let mut out = format!(r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    out.push('\n');
    let _ = writeln!(
        out,
        r#"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        W - 2.0 * PAD,
        H - 2.0 * PAD
    );
    if let Some((kmin, kmax, ymin, ymax)) = bounds(series) {
        let sx = |k: usize| {
            let span = (kmax - kmin).max(1) as f64;
            PAD + (k - kmin) as f64 / span * (W - 2.0 * PAD)
        };
        let sy = |y: f64| H - PAD - (y - ymin) / (ymax - ymin).max(f64::EPSILON) * (H - 2.0 * PAD);
        for (i, (family, points)) in series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let coords: Vec<String> = points.iter().map(|(&k, &y)| format!("{:.1},{:.1}", sx(k), sy(y))).collect();
            let _ = writeln!(
                out,
                r#"<polyline fill="none" stroke="{color}" points="{}"/>"#,
                coords.join(" ")
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="11" fill="{color}">{family}</text>"#,
                PAD + 4.0,
                PAD + 14.0 * (i + 1) as f64
            );
        }
        let _ = writeln!(out, r#"<text x="4" y="{PAD}" font-size="11">{ymax:.2}</text>"#);
        let _ = writeln!(out, r#"<text x="4" y="{}" font-size="11">{ymin:.2}</text>"#, H - PAD);
        let _ = writeln!(out, r#"<text x="{PAD}" y="{}" font-size="11">size {kmin}</text>"#, H - PAD + 16.0);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="11">{kmax}</text>"#,
            W - PAD - 12.0,
            H - PAD + 16.0
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::AlgorithmSpec;
    use crate::harness::{run_game, GameConfig};

    fn run(spec: &str) -> GameResult {
        run_game(&GameConfig::new(spec.parse().unwrap(), AlgorithmSpec::FirstFit)).unwrap().result
    }

    #[test]
    fn empty_report_exits_zero() {
        let b = render_report(&[], 0);
        assert_eq!(b.csv, format!("{CSV_HEADER}\n"));
        assert_eq!(b.audit_json, "[]");
        assert_eq!(b.exit_code, 0);
    }

    #[test]
    fn el_sweep_is_met_and_plotted() {
        let results: Vec<GameResult> = (1..=3).map(|k| run(&format!("el:k={k},a=0"))).collect();
        let b = render_report(&results, 0);
        assert_eq!(b.exit_code, 0);
        assert!(b.rows.iter().all(|r| r.verdict.to_string() == "met"));
        assert_eq!(b.csv.lines().count(), 4);
        assert!(b.plot_ascii.contains("* el"));
        assert!(b.plot_svg.starts_with("<svg") && b.plot_svg.contains("polyline"));
    }

    #[test]
    fn audit_only_misses_keep_exit_zero() {
        let b = render_report(&[run("cs-verbatim:k=4,a=0")], 0);
        assert!(b.rows.iter().any(|r| r.verdict.to_string() == "MISSED"));
        assert_eq!(b.exit_code, 0);
    }

    #[test]
    fn rendering_is_deterministic() {
        let results = vec![run("el:k=2,a=0"), run("b:k=2,a=0")];
        let (a, b) = (render_report(&results, 3), render_report(&results, 3));
        assert_eq!((a.csv, a.audit_json, a.plot_ascii, a.plot_svg), (b.csv, b.audit_json, b.plot_ascii, b.plot_svg));
    }
}
