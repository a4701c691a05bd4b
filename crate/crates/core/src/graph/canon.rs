//! Canonical forms by individualisation and refinement.
//!
//! The canonical form of a graph is the relabelling whose upper-triangle
//! adjacency string (column-major, the graph6 bit order) is lexicographically
//! smallest among all labellings reachable from the equitable ordered partition
//! by individualising vertices. Because refinement is equivariant, this set of
//! labellings is the same for isomorphic graphs, so the minimum is a class
//! invariant. Swapping twins (vertices with equal neighbourhoods outside each
//! other) is an automorphism, so only one twin per cell is ever individualised.

use std::cmp::Ordering;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const MAX_ISO_ORDER: usize = 16;

/// Adjacency bit string in graph6 order, MSB-first per word so that word-wise
/// comparison is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjacencyString(Vec<u64>);

impl AdjacencyString {
    fn of_labelling(g: &Graph, order: &[usize]) -> Self {
        let n = order.len();
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            let row = g.mask(order[j]);
            for &vi in &order[..j] {
                if row >> vi & 1 == 1 {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        AdjacencyString(words)
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(AdjacencyString, Vec<usize>)>,
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(g.order());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.mask(v);
                    let sig = masks.iter().map(|m| (nb & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

#[inline]
fn twins(g: &Graph, u: usize, w: usize) -> bool {
    (g.mask(u) & !(1 << w)) == (g.mask(w) & !(1 << u))
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let s = AdjacencyString::of_labelling(self.g, &order);
            let better = match &self.best {
                None => true,
                Some((b, _)) => s.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some((s, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&t| twins(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child);
        }
    }
}

/// Canonical vertex order: `order[p]` is the vertex placed at position `p`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > 64 {
        return Err(Error::Unsupported(format!(
            "canonical labelling for order {n} > 64"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search { g, best: None };
    search.descend(vec![(0..n).collect()]);
    Ok(search.best.expect("search reaches a leaf").1)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(g.permuted(&perm))
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > MAX_ISO_ORDER {
            return Err(Error::Unsupported(format!(
                "isomorphism test for order {} > {MAX_ISO_ORDER}",
                g.order()
            )));
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}
