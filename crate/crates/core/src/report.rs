//! Report persistence: canonical JSON, CSV grid tables, and log-log-ready
//! plot data. File naming: `reports/<kind>/chi_q.index_xi_h_k.json`.

use crate::error::Result;
use crate::sums::VerificationReport;
use std::path::{Path, PathBuf};

pub fn report_basename(report: &VerificationReport) -> String {
    format!(
        "chi_{}.{}_xi_{}_{}",
        report.inputs.q, report.inputs.index, report.inputs.xi_h, report.inputs.xi_k
    )
}

pub fn report_path(out_dir: &Path, report: &VerificationReport) -> PathBuf {
    out_dir
        .join(report.kind.dir_name())
        .join(format!("{}.json", report_basename(report)))
}

/// CSV grid table: X, |lhs|, |rhs|, residual.
pub fn csv_grid(report: &VerificationReport) -> String {
    let mut out = String::from("x,abs_lhs,abs_rhs,residual\n");
    for p in &report.points {
        let lhs = (p.lhs_re * p.lhs_re + p.lhs_im * p.lhs_im).sqrt();
        let rhs = (p.rhs_re * p.rhs_re + p.rhs_im * p.rhs_im).sqrt();
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e}\n",
            p.x, lhs, rhs, p.residual
        ));
    }
    out
}

/// Writes the JSON report and its CSV grid next to it; returns both paths.
/// JSON is serialized from fixed-order structs, so identical runs produce
/// byte-identical files.
pub fn write_report(out_dir: &Path, report: &VerificationReport) -> Result<(PathBuf, PathBuf)> {
    let json_path = report_path(out_dir, report);
    if let Some(dir) = json_path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    std::fs::write(&json_path, json)?;
    let csv_path = json_path.with_extension("csv");
    std::fs::write(&csv_path, csv_grid(report))?;
    Ok((json_path, csv_path))
}

pub fn load_report(path: &Path) -> Result<VerificationReport> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Plot data: X vs residual, one pair per line, ready for log-log plotting.
pub fn write_plotdata(report: &VerificationReport, out: &Path) -> Result<()> {
    if let Some(dir) = out.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut s = String::from("x,residual\n");
    for p in &report.points {
        s.push_str(&format!("{:.16e},{:.16e}\n", p.x, p.residual));
    }
    std::fs::write(out, s)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::EllSieve;
    use crate::characters::Character;
    use crate::sums::compare_ultraclean_ii;

    #[test]
    fn write_and_reload_report() {
        let sieve = EllSieve::with_default_cap(5000).unwrap();
        let one = Character::trivial();
        let report = compare_ultraclean_ii(&one, &[1000.0, 2000.0, 4000.0], &sieve).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let (json, csv) = write_report(dir.path(), &report).unwrap();
        assert!(json.ends_with("ultraclean_ii/chi_1.0_xi_1_1.json"));
        let back = load_report(&json).unwrap();
        assert_eq!(back.points.len(), 3);
        let grid = std::fs::read_to_string(csv).unwrap();
        assert!(grid.starts_with("x,abs_lhs,abs_rhs,residual\n"));
        assert_eq!(grid.lines().count(), 4);

        // byte-identical on rewrite
        let bytes1 = std::fs::read(&json).unwrap();
        write_report(dir.path(), &report).unwrap();
        assert_eq!(bytes1, std::fs::read(&json).unwrap());

        let plot = dir.path().join("plot.csv");
        write_plotdata(&back, &plot).unwrap();
        assert_eq!(std::fs::read_to_string(plot).unwrap().lines().count(), 4);
    }
}
