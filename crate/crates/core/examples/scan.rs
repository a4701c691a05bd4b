//! Scans every connected graph of an order and writes JSON and CSV reports.
//!
//!     cargo run --release --example scan -- 8 /tmp/reports
//!     cargo run --release --example scan -- 9 /tmp/reports order9.g6

use std::path::PathBuf;

use distspec::lab::{scan_order, write_report, Source};

fn main() -> distspec::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "reports".into()));
    let source = args.next().map_or(Source::Builtin, |f| Source::Graph6File(f.into()));

    let r = scan_order(n, &source, None)?;
    println!("{}", r.banner);
    println!("{} graphs, {} polynomials, {:.2?}", r.graph_count, r.buckets.len(), r.elapsed);
    for b in r.cospectral_classes().take(5) {
        println!("  cospectral: {}", b.members.join(" "));
    }
    for v in &r.violations {
        println!("  VIOLATION {} {} {}", v.claim.name(), v.graph6, v.detail);
    }
    let (json, csv) = write_report(&r, &out)?;
    println!("wrote {} and {}", json.display(), csv.display());
    Ok(())
}
