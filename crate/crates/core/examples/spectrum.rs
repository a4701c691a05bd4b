//! Exact distance polynomial and floating spectrum of a graph given as graph6.
//!
//!     cargo run --example spectrum -- 'Bw'

use distspec::graph::graph6::parse_graph6;
use distspec::spectra::{char_poly_exact, eigenvalues, lambda2_vs_threshold};
use distspec::apsp;

fn main() -> distspec::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Bw".into());
    let g = parse_graph6(&text)?;
    let dm = apsp(&g)?;
    let rows = dm.to_rows();
    let p = char_poly_exact(&rows)?;
    println!("D(G) for {text}:");
    for r in &rows {
        println!("  {r:?}");
    }
    println!("det(λI - D) = {p}");
    println!("spectrum    = {:.6?}", eigenvalues(&rows));
    if g.order() >= 2 {
        println!("λ₂ vs θ     = {}", lambda2_vs_threshold(&p)?);
    }
    Ok(())
}
