//! Reference implementations used as oracles. Deliberately naive and
//! independent of the library's algorithms.
#![allow(dead_code, clippy::needless_range_loop)]

use distspec::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

pub const INF: i64 = i64::MAX / 4;

/// Floyd–Warshall on the adjacency relation.
pub fn floyd(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if g.has_edge(i, j) {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Fraction-free Gaussian elimination (Bareiss) over BigInt.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// det(λI − D) at an integer λ.
pub fn char_value(d: &[Vec<i64>], lambda: i64) -> BigInt {
    let n = d.len();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(if i == j { lambda } else { 0 } - d[i][j]))
                .collect()
        })
        .collect();
    det(&m)
}

/// Pendant clique straight from the definition: clique on `0..s`, pendant
/// vertex `s + i` hanging on clique vertex `i` for `i < t`.
pub fn pendant_clique(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            edges.push((i, j));
        }
    }
    for i in 0..t {
        edges.push((i, s + i));
    }
    Graph::from_edges(s + t, &edges).unwrap()
}

/// Apex 0 joined to disjoint cliques of the given sizes.
pub fn cone(parts: &[usize]) -> Graph {
    let n = parts.iter().sum::<usize>() + 1;
    let mut edges = Vec::new();
    let mut start = 1;
    for &p in parts {
        for i in start..start + p {
            edges.push((0, i));
            for j in i + 1..start + p {
                edges.push((i, j));
            }
        }
        start += p;
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges).unwrap()
}

/// graph6 written bit by bit from the format description (n < 63).
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b));
        s.push((v + 63) as char);
    }
    s
}

/// Isomorphism-invariant key: the lexicographically smallest adjacency
/// bit string over all n! relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(perm[i], perm[j]));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap_or_default()
}

pub fn is_connected_oracle(g: &Graph) -> bool {
    floyd(g).iter().flatten().all(|&x| x < INF)
}
