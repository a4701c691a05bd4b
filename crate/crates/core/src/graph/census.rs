//! Connected graphs of small order, one canonical representative per
//! isomorphism class.
//!
//! Every connected graph on `n + 1` vertices has a non-cut vertex (a leaf of any
//! spanning tree), so extending each connected class of order `n` by one vertex
//! with every nonempty neighbourhood and deduplicating canonical forms yields
//! every connected class of order `n + 1`.

use std::collections::HashSet;

use super::canon::canonical_form;
use super::graph6::write_graph6;
use super::Graph;
use crate::error::{Error, Result};

/// Largest order served by [`enumerate_connected`].
pub const MAX_BUILTIN_ORDER: usize = 8;

/// Known counts of connected graphs, indexed by order (0..=10).
pub const CONNECTED_COUNTS: [usize; 11] = [0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

/// One canonical representative of each connected class of order `n + 1`,
/// given all representatives of order `n`. Output is sorted by graph6 string.
pub fn extend_connected(reps: &[Graph]) -> Vec<Graph> {
    let mut seen: HashSet<Graph> = HashSet::new();
    for g in reps {
        let n = g.order();
        assert!(n < 64, "extension limited to order 64");
        for nbrs in 1u64..(1u64 << n) {
            let h = g.with_vertex((0..n).filter(|&v| nbrs >> v & 1 == 1));
            seen.insert(canonical_form(&h).expect("order below 64"));
        }
    }
    sorted(seen)
}

fn sorted(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = graphs
        .into_iter()
        .map(|g| (write_graph6(&g), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// All connected graphs of order `n` up to isomorphism, as canonical forms
/// sorted by graph6 string.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_BUILTIN_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut reps = vec![Graph::empty(1)];
    for _ in 1..n {
        reps = extend_connected(&reps);
    }
    Ok(reps)
}
