//! The three graph families with small second distance eigenvalue: complete
//! graphs `K_n`, pendant cliques `K_s^t` (a clique `K_s` with a pendant edge on
//! `t` of its vertices, `2 ≤ t ≤ s`) and cones `K^{n_1,…,n_k}_n` (an apex joined
//! to a disjoint union of `k ≥ 2` cliques).
//!
//! Each family has a closed-form distance characteristic polynomial, a
//! structural recogniser, and a spectral inverse that recovers the parameters
//! from the polynomial alone.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{CharPoly, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyDescriptor {
    Complete { n: usize },
    PendantClique { s: usize, t: usize },
    /// Parts sorted descending.
    ConeOfCliques { parts: Vec<usize> },
}

impl FamilyDescriptor {
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("complete graph needs n ≥ 1".into()));
        }
        Ok(FamilyDescriptor::Complete { n })
    }

    pub fn pendant(s: usize, t: usize) -> Result<Self> {
        check_pendant(s, t)?;
        Ok(FamilyDescriptor::PendantClique { s, t })
    }

    pub fn cone(parts: &[usize]) -> Result<Self> {
        check_cone(parts)?;
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(FamilyDescriptor::ConeOfCliques { parts })
    }

    pub fn order(&self) -> usize {
        match self {
            FamilyDescriptor::Complete { n } => *n,
            FamilyDescriptor::PendantClique { s, t } => s + t,
            FamilyDescriptor::ConeOfCliques { parts } => parts.iter().sum::<usize>() + 1,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilyDescriptor::Complete { n } => build_complete(*n),
            FamilyDescriptor::PendantClique { s, t } => build_pendant_clique(*s, *t),
            FamilyDescriptor::ConeOfCliques { parts } => build_cone_of_cliques(parts),
        }
    }

    pub fn closed_form_poly(&self) -> Result<CharPoly> {
        match self {
            FamilyDescriptor::Complete { n } => Ok(closed_form_complete_poly(*n)),
            FamilyDescriptor::PendantClique { s, t } => closed_form_pendant_poly(*s, *t),
            FamilyDescriptor::ConeOfCliques { parts } => closed_form_cone_poly(parts),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyDescriptor::Complete { n } => format!("K_n({n})"),
            FamilyDescriptor::PendantClique { s, t } => format!("Kst({s},{t})"),
            FamilyDescriptor::ConeOfCliques { parts } => {
                let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                format!("Cone({})", p.join(","))
            }
        };
        f.pad(&s)
    }
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("bad family descriptor {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (name, nums.as_slice()) {
            ("K_n", [n]) => FamilyDescriptor::complete(*n),
            ("Kst", [s, t]) => FamilyDescriptor::pendant(*s, *t),
            ("Cone", parts) => FamilyDescriptor::cone(parts),
            _ => Err(bad()),
        }
    }
}

impl Serialize for FamilyDescriptor {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyDescriptor {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_pendant(s: usize, t: usize) -> Result<()> {
    if t < 2 || t > s {
        return Err(Error::Argument(format!(
            "pendant clique needs 2 ≤ t ≤ s, got s={s}, t={t}"
        )));
    }
    Ok(())
}

fn check_cone(parts: &[usize]) -> Result<()> {
    if parts.len() < 2 {
        return Err(Error::Argument(format!(
            "cone of cliques needs at least 2 parts, got {}",
            parts.len()
        )));
    }
    if parts.contains(&0) {
        return Err(Error::Argument("cone parts must be ≥ 1".into()));
    }
    Ok(())
}

pub fn build_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Argument("complete graph needs n ≥ 1".into()));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Clique on `0..s`; vertex `s + i` hangs off clique vertex `i` for `i < t`.
pub fn build_pendant_clique(s: usize, t: usize) -> Result<Graph> {
    check_pendant(s, t)?;
    let mut g = Graph::empty(s + t);
    for u in 0..s {
        for v in u + 1..s {
            g.add_edge(u, v);
        }
    }
    for i in 0..t {
        g.add_edge(i, s + i);
    }
    Ok(g)
}

/// Apex `0` joined to everything; the cliques occupy consecutive blocks after it.
pub fn build_cone_of_cliques(parts: &[usize]) -> Result<Graph> {
    check_cone(parts)?;
    let n = parts.iter().sum::<usize>() + 1;
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    let mut start = 1;
    for &p in parts {
        for u in start..start + p {
            for v in u + 1..start + p {
                g.add_edge(u, v);
            }
        }
        start += p;
    }
    Ok(g)
}

/// `λ² + 4λ + 2`, the product of `λ + 2 ∓ √2`.
pub fn surd_quadratic() -> Poly {
    Poly::from_i64(&[2, 4, 1])
}

/// `(λ − n + 1)(λ + 1)^{n−1}`.
pub fn closed_form_complete_poly(n: usize) -> CharPoly {
    let p = &Poly::linear(n as i64 - 1) * &Poly::linear(-1).pow(n - 1);
    CharPoly::from_poly(p).expect("monic")
}

/// The non-surd, non-(λ+1) factor of the `K_s^t` polynomial: a cubic when
/// `s ≥ t + 1`, a quadratic when `s = t`.
pub fn pendant_core_factor(s: usize, t: usize) -> Result<Poly> {
    check_pendant(s, t)?;
    let (s, t) = (s as i64, t as i64);
    Ok(if s > t {
        Poly::from_i64(&[2 - 2 * s - s * t, 6 - 4 * s - 2 * t - s * t, 5 - s - 3 * t, 1])
    } else {
        Poly::from_i64(&[2 - 2 * t - t * t, 4 - 4 * t, 1])
    })
}

pub fn closed_form_pendant_poly(s: usize, t: usize) -> Result<CharPoly> {
    let core = pendant_core_factor(s, t)?;
    let ones = if s > t { s - t - 1 } else { 0 };
    let p = &(&Poly::linear(-1).pow(ones) * &surd_quadratic().pow(t - 1)) * &core;
    CharPoly::from_poly(p)
}

/// Factors of the cone polynomial `(λ+1)^{n−k−1}·g(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFactor {
    /// Π (λ + n_i + 1).
    pub h: Poly,
    /// λ·h − (2λ+1)·Σ n_i Π_{j≠i} (λ + n_j + 1), degree k + 1.
    pub g: Poly,
    pub k: usize,
}

impl ConeFactor {
    pub fn new(parts: &[usize]) -> Result<Self> {
        check_cone(parts)?;
        let lin: Vec<Poly> = parts.iter().map(|&p| Poly::linear(-(p as i64) - 1)).collect();
        let h = lin.iter().fold(Poly::one(), |acc, f| &acc * f);
        let mut sum = Poly::zero();
        for (i, &ni) in parts.iter().enumerate() {
            let others = lin
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(Poly::one(), |acc, (_, f)| &acc * f);
            sum = &sum + &others.scale(&BigInt::from(ni));
        }
        let two_lam_plus_one = Poly::from_i64(&[1, 2]);
        let g = &(&Poly::monomial(1) * &h) - &(&two_lam_plus_one * &sum);
        Ok(ConeFactor {
            h,
            g,
            k: parts.len(),
        })
    }
}

/// `[λ − k(2λ+1)]·h + (2λ+1)(λ+1)·h′`, an equivalent expression for `g`.
pub fn g_from_h(h: &Poly, k: usize) -> Poly {
    let k = k as i64;
    let a = Poly::from_i64(&[-k, 1 - 2 * k]);
    let b = Poly::from_i64(&[1, 3, 2]);
    &(&a * h) + &(&b * &h.derivative())
}

/// Inverts [`g_from_h`] for monic `h` of degree `k`; the system is triangular
/// with diagonal `1 − 2(k − j)`. `None` if the solution is not integral or the
/// round trip fails.
pub fn h_from_g(g: &Poly, k: usize) -> Option<Poly> {
    if g.degree() != Some(k + 1) || !g.leading()?.is_one() {
        return None;
    }
    let mut h = vec![BigInt::zero(); k + 1];
    h[k] = BigInt::one();
    let ki = k as i64;
    for j in (0..k).rev() {
        let mut rhs = g.coeff(j + 1);
        rhs -= BigInt::from(3 * (j as i64 + 1) - ki) * &h[j + 1];
        if j + 2 <= k {
            rhs -= BigInt::from(j as i64 + 2) * &h[j + 2];
        }
        let diag = BigInt::from(1 - 2 * (ki - j as i64));
        let (q, r) = rhs.div_rem(&diag);
        if !r.is_zero() {
            return None;
        }
        h[j] = q;
    }
    let h = Poly::new(h);
    (g_from_h(&h, k) == *g).then_some(h)
}

pub fn closed_form_cone_poly(parts: &[usize]) -> Result<CharPoly> {
    let cf = ConeFactor::new(parts)?;
    let n = parts.iter().sum::<usize>() + 1;
    let p = &Poly::linear(-1).pow(n - cf.k - 1) * &cf.g;
    CharPoly::from_poly(p)
}

/// Structural family membership. Errors on disconnected input.
pub fn recognize(g: &Graph) -> Result<Option<FamilyDescriptor>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let deg = g.degrees();
    if deg.iter().all(|&d| d == n - 1) {
        return Ok(Some(FamilyDescriptor::Complete { n }));
    }
    if let Some(apex) = deg.iter().position(|&d| d == n - 1) {
        let rest = g.without_vertex(apex);
        let comps = rest.components();
        if comps.len() >= 2 && comps.iter().all(|c| rest.is_clique(c)) {
            let parts: Vec<usize> = comps.iter().map(Vec::len).collect();
            return Ok(Some(FamilyDescriptor::cone(&parts)?));
        }
        return Ok(None);
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let t = leaves.len();
    if t < 2 {
        return Ok(None);
    }
    let core: Vec<usize> = (0..n).filter(|&v| deg[v] != 1).collect();
    let s = core.len();
    let mut anchors: Vec<usize> = leaves
        .iter()
        .map(|&l| g.neighbors(l).next().unwrap())
        .collect();
    anchors.sort_unstable();
    anchors.dedup();
    if anchors.len() == t
        && anchors.iter().all(|a| deg[*a] != 1)
        && g.is_clique(&core)
        && t <= s
    {
        return Ok(Some(FamilyDescriptor::PendantClique { s, t }));
    }
    Ok(None)
}

/// Recovers the cone parts from a characteristic polynomial.
pub fn reconstruct_cone_partition(p: &CharPoly) -> Option<Vec<usize>> {
    let n = p.degree();
    if n < 3 {
        return None;
    }
    let minus_one = Poly::linear(-1);
    let mult = p.poly().multiplicity_of(&minus_one);
    let k = (n - 1).checked_sub(mult)?;
    if k < 2 {
        return None;
    }
    let g = p.poly().div_exact(&minus_one.pow(mult))?;
    let mut h = h_from_g(&g, k)?;
    let mut parts = Vec::with_capacity(k);
    for m in 2..=n as i64 {
        let f = Poly::linear(-m);
        while let Some(q) = h.div_exact(&f) {
            parts.push(m as usize - 1);
            h = q;
        }
    }
    if h != Poly::one() || parts.len() != k {
        return None;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    (closed_form_cone_poly(&parts).ok()? == *p).then_some(parts)
}

/// Recovers `(s, t)` from a characteristic polynomial via the multiplicity of
/// `λ² + 4λ + 2`.
pub fn pendant_params_from_poly(p: &CharPoly) -> Option<(usize, usize)> {
    let n = p.degree();
    let t = p.poly().multiplicity_of(&surd_quadratic()) + 1;
    let s = n.checked_sub(t)?;
    if t < 2 || t > s {
        return None;
    }
    (closed_form_pendant_poly(s, t).ok()? == *p).then_some((s, t))
}

/// All partitions of `total` into at least `min_parts` positive parts, each
/// sorted descending.
pub fn partitions(total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_parts);
    out
}

/// Every family member of order `n`, in a fixed order.
pub fn members_of_order(n: usize) -> Vec<FamilyDescriptor> {
    let mut out = Vec::new();
    if n >= 1 {
        out.push(FamilyDescriptor::Complete { n });
    }
    for t in 2..=n / 2 {
        out.push(FamilyDescriptor::PendantClique { s: n - t, t });
    }
    if n >= 3 {
        for parts in partitions(n - 1, 2) {
            out.push(FamilyDescriptor::ConeOfCliques { parts });
        }
    }
    out
}
