//! Trace identities on every diameter-2 graph of a small order and on a few
//! pendant cliques.

use distspec::families::build_pendant_clique;
use distspec::graph::census::enumerate_connected;
use distspec::lab::moment_audit;

fn main() -> distspec::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let (mut checked, mut failed) = (0, 0);
    for g in enumerate_connected(n)? {
        let a = moment_audit(&g)?;
        if a.diameter == 2 {
            checked += 1;
            failed += usize::from(!a.holds());
        }
    }
    println!("order {n}: {checked} diameter-2 graphs, {failed} failures");
    for (s, t) in [(4, 2), (5, 3), (7, 7)] {
        let a = moment_audit(&build_pendant_clique(s, t)?)?;
        println!("K_{s}^{t}: Σλ² = {} = {:?}", a.moment2, a.pendant_formula);
    }
    Ok(())
}
