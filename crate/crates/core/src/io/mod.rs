//! File formats: suite CSV in, JSON reports and DOT diagrams out.

pub mod dot;
pub mod report;
pub mod suite;

use std::io::Write;
use std::path::Path;

pub use dot::write_hasse_dot;
pub use report::{write_report_json, ReportContext};
pub use suite::{parse_suite_csv, write_suite_csv, ParseError, SuiteDocument};

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Reads an edge list (`a<b` per line, `b` outperforming `a`) into pairs of
/// labels. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Vec<(String, String)>, (usize, String)> {
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line.split_once('<') {
            Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() && !b.contains('<') => {
                pairs.push((a.trim().to_string(), b.trim().to_string()))
            }
            _ => return Err((n + 1, raw.to_string())),
        }
    }
    Ok(pairs)
}
