//! Small fixed patterns and induced-occurrence search.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    C4,
    C5,
    P5,
    H1,
    H2,
    H3,
    K16,
}

impl PatternKind {
    pub const ALL: [PatternKind; 7] = [
        PatternKind::C4,
        PatternKind::C5,
        PatternKind::P5,
        PatternKind::H1,
        PatternKind::H2,
        PatternKind::H3,
        PatternKind::K16,
    ];

    /// The six patterns whose presence pushes λ₂ above the threshold.
    pub const FORBIDDEN: [PatternKind; 6] = [
        PatternKind::C4,
        PatternKind::C5,
        PatternKind::P5,
        PatternKind::H1,
        PatternKind::H2,
        PatternKind::H3,
    ];

    pub fn order(self) -> usize {
        match self {
            PatternKind::C4 | PatternKind::H1 => 4,
            PatternKind::C5 | PatternKind::P5 | PatternKind::H2 | PatternKind::H3 => 5,
            PatternKind::K16 => 7,
        }
    }

    /// Edge list on vertices `0..order`; vertex `i` is `v_{i+1}` in the usual drawings.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            PatternKind::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            PatternKind::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            // K4 minus the edge 1-3
            PatternKind::H1 => &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
            // path v1v2v3v4, v5 on v2
            PatternKind::H2 => &[(0, 1), (1, 2), (2, 3), (1, 4)],
            // path v1v2v3v4, v5 on v1 and v2
            PatternKind::H3 => &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4)],
            PatternKind::K16 => &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::from_edges(self.order(), self.edges()).expect("pattern edges are valid")
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PatternKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown pattern {s:?}")))
    }
}

/// First induced occurrence of `pattern` in `g`: `tuple[i]` is the host vertex
/// playing pattern vertex `i`. Ordered-tuple backtracking with degree pruning.
pub fn find_induced(g: &Graph, pattern: PatternKind) -> Option<Vec<usize>> {
    let p = pattern.graph();
    find_induced_graph(g, &p)
}

/// [`find_induced`] for an arbitrary pattern graph.
pub fn find_induced_graph(g: &Graph, p: &Graph) -> Option<Vec<usize>> {
    let k = p.order();
    if k > g.order() {
        return None;
    }
    let host_deg = g.degrees();
    let pat_deg = p.degrees();
    let mut tuple = Vec::with_capacity(k);
    let mut used = vec![false; g.order()];
    if extend(g, p, &host_deg, &pat_deg, &mut tuple, &mut used) {
        Some(tuple)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    p: &Graph,
    host_deg: &[usize],
    pat_deg: &[usize],
    tuple: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = tuple.len();
    if i == p.order() {
        return true;
    }
    for v in 0..g.order() {
        if used[v] || host_deg[v] < pat_deg[i] {
            continue;
        }
        if tuple
            .iter()
            .enumerate()
            .any(|(j, &u)| g.has_edge(u, v) != p.has_edge(j, i))
        {
            continue;
        }
        tuple.push(v);
        used[v] = true;
        if extend(g, p, host_deg, pat_deg, tuple, used) {
            return true;
        }
        used[v] = false;
        tuple.pop();
    }
    false
}
