//! Writes every connected graph of order n + 1 as graph6 by extending the
//! built-in census of order n (n ≤ 8). The result feeds `scan --graph6`.
//!
//!     cargo run --release --example extend_census -- 8 order9.g6

use std::fs::File;
use std::io::{BufWriter, Write};

use distspec::graph::census::{enumerate_connected, extend_connected, CONNECTED_COUNTS};
use distspec::graph::graph6::write_graph6;

fn main() -> distspec::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let path = args.next().unwrap_or_else(|| format!("order{}.g6", n + 1));
    let next = extend_connected(&enumerate_connected(n)?);
    let mut w = BufWriter::new(File::create(&path)?);
    for g in &next {
        writeln!(w, "{}", write_graph6(g))?;
    }
    w.flush()?;
    println!("{} graphs of order {} written to {path} (expected {})", next.len(), n + 1, CONNECTED_COUNTS[n + 1]);
    Ok(())
}
