//! Persistent JSON and CSV forms of a scan.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::scan::ScanReport;
use crate::error::Result;

#[derive(Serialize)]
struct Row<'a> {
    n: usize,
    poly_key: &'a str,
    size: usize,
    graph6_members: String,
    lambda2: String,
    exact: &'a str,
}

pub fn to_json(r: &ScanReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

/// One row per cospectral bucket; members are space separated.
pub fn write_csv<W: Write>(r: &ScanReport, w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for b in &r.buckets {
        out.serialize(Row {
            n: r.order,
            poly_key: &b.key,
            size: b.members.len(),
            graph6_members: b.members.join(" "),
            lambda2: b.lambda2.map(|x| format!("{x:.12}")).unwrap_or_default(),
            exact: b.exact.map_or("", |v| v.as_str()),
        })?;
    }
    out.flush()?;
    Ok(())
}

/// Writes `scan_n{N}.json` and `scan_n{N}.csv` into `dir`.
pub fn write_report(r: &ScanReport, dir: &Path) -> Result<(PathBuf, PathBuf)> {
    fs::create_dir_all(dir)?;
    let json = dir.join(format!("scan_n{}.json", r.order));
    let csv = dir.join(format!("scan_n{}.csv", r.order));
    fs::write(&json, to_json(r)?)?;
    write_csv(r, fs::File::create(&csv)?)?;
    Ok((json, csv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::scan::{scan_order, Source};

    #[test]
    fn reports_are_byte_identical_across_worker_counts() {
        let a = scan_order(5, &Source::Builtin, Some(1)).unwrap();
        let b = scan_order(5, &Source::Builtin, Some(3)).unwrap();
        assert_eq!(to_json(&a).unwrap(), to_json(&b).unwrap());
        let dir = tempfile::tempdir().unwrap();
        let (_, csv) = write_report(&a, dir.path()).unwrap();
        let text = fs::read_to_string(csv).unwrap();
        assert!(text.starts_with("n,poly_key,size,graph6_members,lambda2,exact\n"));
        assert_eq!(text.lines().count(), a.buckets.len() + 1);
    }
}
