//! Family polynomials are pairwise distinct and invertible up to an order.

use distspec::lab::family_cross_check;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    let r = family_cross_check(n_max);
    for (n, m) in r.members.iter().enumerate().skip(1) {
        println!("order {n:>2}: {m:>3} members");
    }
    println!("{} issues", r.issues.len());
    for i in &r.issues {
        println!("  {:?} at order {}: {}", i.kind, i.order, i.detail);
    }
}
