//! Exhaustive verification over every connected graph of one order.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::moments::moment_audit_with;
use crate::classifier::{check_certificate, classify_structural_with, Classification};
use crate::error::{Error, Result};
use crate::families::{members_of_order, FamilyDescriptor};
use crate::graph::canon::canonical_form;
use crate::graph::census::enumerate_connected;
use crate::graph::graph6::{parse_graph6, strip_header, write_graph6};
use crate::graph::{apsp, Graph};
use crate::spectra::sturm::{lambda2_against, lambda2_vs_threshold_with};
use crate::spectra::{
    char_poly_exact, eigenvalues, lambda2_vs_threshold, one_minus_sqrt3, Lambda2Verdict, QuadAlg,
    SturmChain, Theta,
};

/// Environment variable read for the worker count when none is given.
pub const JOBS_ENV: &str = "DISTSPEC_JOBS";

/// Floating λ₂ this close to θ is not compared with the exact verdict.
pub const FLOAT_GUARD: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin,
    Graph6File(PathBuf),
}

/// Named claims a scan can falsify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// λ₂ ≤ θ forces family membership.
    BelowImpliesFamily,
    /// λ₂ ≤ θ forces a singleton cospectral class.
    BelowImpliesUnique,
    /// λ₂ ≥ −1, with equality exactly for complete graphs.
    LowerBound,
    /// No λ₂ strictly between −1 and 1 − √3.
    Gap,
    /// Structural and spectral classification agree and the certificate checks.
    Consistency,
    /// Σλ = 0 and Σλ² = Σ d² (plus the closed forms where they apply).
    Trace,
    /// Closed-form polynomial equals the computed one for family members.
    ClosedForm,
    /// Floating λ₂ agrees with the exact verdict away from θ.
    FloatAgreement,
    /// Number of graphs at or below θ equals the family count from closed forms.
    FamilyCount,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::BelowImpliesFamily => "below-implies-family",
            Claim::BelowImpliesUnique => "below-implies-unique",
            Claim::LowerBound => "lower-bound",
            Claim::Gap => "gap",
            Claim::Consistency => "consistency",
            Claim::Trace => "trace",
            Claim::ClosedForm => "closed-form",
            Claim::FloatAgreement => "float-agreement",
            Claim::FamilyCount => "family-count",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub claim: Claim,
    /// Offending graph, empty for aggregate claims.
    pub graph6: String,
    pub detail: String,
}

/// One class of D-cospectral graphs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bucket {
    pub key: String,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
    pub lambda2: Option<f64>,
    pub exact: Option<Lambda2Verdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub banner: String,
    pub order: usize,
    pub graph_count: usize,
    /// Input lines that were isomorphic to an earlier line.
    pub duplicates: usize,
    /// Graphs with exact λ₂ ≤ θ.
    pub at_or_below: usize,
    /// Family members of this order with λ₂ ≤ θ by closed form.
    pub family_at_or_below: usize,
    pub buckets: Vec<Bucket>,
    pub violations: Vec<Violation>,
    /// Wall time; not serialised so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn cospectral_classes(&self) -> impl Iterator<Item = &Bucket> {
        self.buckets.iter().filter(|b| b.members.len() >= 2)
    }

    pub fn violations_of(&self, claim: Claim) -> usize {
        self.violations.iter().filter(|v| v.claim == claim).count()
    }
}

pub fn banner(n: usize) -> String {
    format!(
        "desk-scale check: every connected graph of order {n} was examined; \
         the general statement is verified here only for the orders actually scanned"
    )
}

/// Per-graph results that the bucket merge needs.
struct Analysed {
    graph6: String,
    key: String,
    lambda2: Option<f64>,
    exact: Option<Lambda2Verdict>,
    violations: Vec<Violation>,
}

fn violation(claim: Claim, g6: &str, detail: impl Into<String>) -> Violation {
    Violation {
        claim,
        graph6: g6.to_string(),
        detail: detail.into(),
    }
}

/// Every per-graph check. Never fails: problems become violations.
fn analyse(g: &Graph) -> Analysed {
    let g6 = write_graph6(g);
    let mut out = Vec::new();
    let dm = match apsp(g) {
        Ok(dm) => dm,
        Err(e) => {
            out.push(violation(Claim::Consistency, &g6, e.to_string()));
            return Analysed {
                graph6: g6,
                key: String::new(),
                lambda2: None,
                exact: None,
                violations: out,
            };
        }
    };
    let rows = dm.to_rows();
    let p = char_poly_exact(&rows).expect("square matrix");
    let key = p.key();

    let structural = classify_structural_with(g, &dm);
    let family = match &structural {
        Ok(Classification::InFamily(d)) => Some(d.clone()),
        _ => None,
    };

    let audit = moment_audit_with(g, dm.diameter(), dm.sum_of_squares(), &p, family.as_ref());
    if !audit.holds() {
        out.push(violation(Claim::Trace, &g6, format!("{audit:?}")));
    }

    if let Some(d) = &family {
        match d.closed_form_poly() {
            Ok(cf) if cf == p => {}
            Ok(cf) => out.push(violation(Claim::ClosedForm, &g6, format!("{d}: {cf} vs {p}"))),
            Err(e) => out.push(violation(Claim::ClosedForm, &g6, e.to_string())),
        }
    }

    if g.order() < 2 {
        // λ₂ is undefined; only structure and trace apply
        if let Err(e) = &structural {
            out.push(violation(Claim::Consistency, &g6, e.to_string()));
        }
        return Analysed {
            graph6: g6,
            key,
            lambda2: None,
            exact: None,
            violations: out,
        };
    }

    let chain = SturmChain::new(p.poly());
    let verdict = lambda2_vs_threshold_with(&chain, &p).expect("order ≥ 2");
    let l2 = eigenvalues(&rows)[1];

    // (a)
    if verdict.at_most() && family.is_none() {
        out.push(violation(
            Claim::BelowImpliesFamily,
            &g6,
            format!("λ₂ {verdict} θ but no family recognised"),
        ));
    }

    // (c)
    let vs_minus_one = lambda2_against(&chain, &p, &QuadAlg::<1>::rational(-1, 1)).expect("λ₁ > 0");
    let complete = matches!(family, Some(FamilyDescriptor::Complete { .. }));
    match vs_minus_one {
        Lambda2Verdict::Below => {
            out.push(violation(Claim::LowerBound, &g6, format!("λ₂ < −1 (≈ {l2:.6})")))
        }
        Lambda2Verdict::Equal if !complete => {
            out.push(violation(Claim::LowerBound, &g6, "λ₂ = −1 on a non-complete graph"))
        }
        Lambda2Verdict::Above if complete => {
            out.push(violation(Claim::LowerBound, &g6, "complete graph with λ₂ ≠ −1"))
        }
        _ => {}
    }

    // (d)
    if vs_minus_one == Lambda2Verdict::Above {
        let vs_gap = lambda2_against(&chain, &p, &one_minus_sqrt3()).expect("λ₁ > 0");
        if vs_gap == Lambda2Verdict::Below {
            out.push(violation(
                Claim::Gap,
                &g6,
                format!("−1 < λ₂ < 1 − √3 (≈ {l2:.6})"),
            ));
        }
    }

    // (e)
    match &structural {
        Ok(c) => {
            // family members may still lie above θ (the star K_{1,6}), so only
            // a witness contradicting the exact verdict counts
            if !c.is_family() && verdict.at_most() {
                out.push(violation(
                    Claim::Consistency,
                    &g6,
                    format!("forbidden witness but exact verdict {verdict}"),
                ));
            }
            if !check_certificate(g, c) {
                out.push(violation(Claim::Consistency, &g6, "certificate does not verify"));
            }
        }
        Err(e) => out.push(violation(Claim::Consistency, &g6, e.to_string())),
    }

    let theta = Theta::theta().to_f64();
    if (l2 - theta).abs() > FLOAT_GUARD && (l2 > theta) != (verdict == Lambda2Verdict::Above) {
        out.push(violation(
            Claim::FloatAgreement,
            &g6,
            format!("float λ₂ {l2:.9} vs exact {verdict}"),
        ));
    }

    Analysed {
        graph6: g6,
        key,
        lambda2: Some(l2),
        exact: Some(verdict),
        violations: out,
    }
}

/// Reads a graph6 stream, canonicalises and deduplicates. Returns the graphs
/// sorted by canonical graph6 and the number of duplicates dropped.
pub fn read_graph6_file(path: &Path, n: usize) -> Result<(Vec<Graph>, usize)> {
    let file = fs::File::open(path)?;
    let shown = path.display().to_string();
    let at = |line: usize, e: Error| Error::Input {
        path: shown.clone(),
        line,
        source: Box::new(e),
    };
    let mut seen: HashSet<String> = HashSet::new();
    let mut graphs = Vec::new();
    let mut duplicates = 0;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let Some(body) = strip_header(&line) else {
            continue;
        };
        let g = parse_graph6(body).map_err(|e| at(i + 1, e))?;
        if g.order() != n {
            return Err(at(
                i + 1,
                Error::Argument(format!("graph of order {} in a scan of order {n}", g.order())),
            ));
        }
        if !g.is_connected() {
            return Err(at(i + 1, Error::Disconnected));
        }
        let c = canonical_form(&g).map_err(|e| at(i + 1, e))?;
        if seen.insert(write_graph6(&c)) {
            graphs.push(c);
        } else {
            duplicates += 1;
        }
    }
    graphs.sort_by_cached_key(write_graph6);
    Ok((graphs, duplicates))
}

fn worker_count(jobs: Option<usize>) -> usize {
    jobs.or_else(|| std::env::var(JOBS_ENV).ok()?.parse().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Family members of order `n` at or below θ, from closed forms alone.
pub fn family_count_at_or_below(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    members_of_order(n)
        .iter()
        .filter(|d| {
            let p = d.closed_form_poly().expect("valid member");
            lambda2_vs_threshold(&p).expect("order ≥ 2").at_most()
        })
        .count()
}

/// Scans a list of canonical graphs of order `n`.
pub fn scan_graphs(n: usize, graphs: &[Graph], jobs: Option<usize>) -> Result<ScanReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(jobs))
        .build()
        .map_err(|e| Error::Argument(e.to_string()))?;
    let analysed: Vec<Analysed> = pool.install(|| graphs.par_iter().map(analyse).collect());

    let mut violations = Vec::new();
    let mut buckets: BTreeMap<String, Bucket> = BTreeMap::new();
    let mut at_or_below = 0;
    for a in analysed {
        violations.extend(a.violations);
        if a.exact.is_some_and(Lambda2Verdict::at_most) {
            at_or_below += 1;
        }
        let b = buckets.entry(a.key.clone()).or_insert_with(|| Bucket {
            key: a.key,
            members: Vec::new(),
            lambda2: a.lambda2,
            exact: a.exact,
        });
        b.members.push(a.graph6);
    }

    let mut buckets: Vec<Bucket> = buckets.into_values().collect();
    for b in &mut buckets {
        b.members.sort();
        // (b)
        if b.members.len() >= 2 && b.exact.is_some_and(Lambda2Verdict::at_most) {
            for g6 in &b.members {
                violations.push(violation(
                    Claim::BelowImpliesUnique,
                    g6,
                    format!("cospectral class of size {} at or below θ", b.members.len()),
                ));
            }
        }
    }

    let family_at_or_below = family_count_at_or_below(n);
    if n >= 2 && at_or_below != family_at_or_below {
        violations.push(violation(
            Claim::FamilyCount,
            "",
            format!("{at_or_below} graphs at or below θ, {family_at_or_below} family members"),
        ));
    }
    violations.sort();

    Ok(ScanReport {
        banner: banner(n),
        order: n,
        graph_count: graphs.len(),
        duplicates: 0,
        at_or_below,
        family_at_or_below,
        buckets,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Scans every connected graph of order `n` from the built-in enumerator
/// (`n ≤ 8`) or a graph6 file.
pub fn scan_order(n: usize, source: &Source, jobs: Option<usize>) -> Result<ScanReport> {
    let start = Instant::now();
    let (graphs, duplicates) = match source {
        Source::Builtin => (enumerate_connected(n)?, 0),
        Source::Graph6File(path) => read_graph6_file(path, n)?,
    };
    let mut report = scan_graphs(n, &graphs, jobs)?;
    report.duplicates = duplicates;
    report.elapsed = start.elapsed();
    Ok(report)
}
