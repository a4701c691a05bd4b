//! Certified decision of λ₂(D(G)) against θ.
//!
//! Two independent routes: the structural one recognises a family member or
//! exhibits a forbidden induced pattern whose principal distance submatrix
//! already has two roots above θ (interlacing then lifts that to the whole
//! graph); the spectral one runs the exact Sturm test on the full polynomial.

use std::cell::RefCell;
use std::collections::HashMap;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{recognize, FamilyDescriptor};
use crate::graph::canon::is_isomorphic;
use crate::graph::graph6::write_graph6;
use crate::graph::pattern::{find_induced_graph, PatternKind};
use crate::graph::{apsp, DistanceMatrix, Graph};
use crate::spectra::{
    char_poly_exact, eigenvalues, lambda2_vs_threshold, Lambda2Verdict, SturmChain, Theta,
};

/// Distances left free when a pattern sits inside a larger host.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slots {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
}

/// A forbidden pattern with its free distances filled in.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionCase {
    pub pattern: PatternKind,
    pub slots: Slots,
    pub matrix: Vec<Vec<i64>>,
    pub lambda2: f64,
}

/// Principal distance submatrix of a pattern embedded with the given free
/// distances.
///
/// * P5: `a = d(v1,v4)`, `b = d(v1,v5)`, `c = d(v2,v5)`.
/// * H2, H3: `a = d(v1,v4)`, `b = d(v4,v5)`.
/// * C4, C5, H1 have diameter 2, so their template has no slots.
pub fn completion_matrix(pattern: PatternKind, slots: Slots) -> Result<Vec<Vec<i64>>> {
    let need = |x: Option<u32>, name: &str| -> Result<i64> {
        x.map(i64::from)
            .ok_or_else(|| Error::Argument(format!("{pattern} needs slot {name}")))
    };
    Ok(match pattern {
        PatternKind::P5 => {
            let (a, b, c) = (need(slots.a, "a")?, need(slots.b, "b")?, need(slots.c, "c")?);
            vec![
                vec![0, 1, 2, a, b],
                vec![1, 0, 1, 2, c],
                vec![2, 1, 0, 1, 2],
                vec![a, 2, 1, 0, 1],
                vec![b, c, 2, 1, 0],
            ]
        }
        PatternKind::H2 => {
            let (a, b) = (need(slots.a, "a")?, need(slots.b, "b")?);
            vec![
                vec![0, 1, 2, a, 2],
                vec![1, 0, 1, 2, 1],
                vec![2, 1, 0, 1, 2],
                vec![a, 2, 1, 0, b],
                vec![2, 1, 2, b, 0],
            ]
        }
        PatternKind::H3 => {
            let (a, b) = (need(slots.a, "a")?, need(slots.b, "b")?);
            vec![
                vec![0, 1, 2, a, 1],
                vec![1, 0, 1, 2, 1],
                vec![2, 1, 0, 1, 2],
                vec![a, 2, 1, 0, b],
                vec![1, 1, 2, b, 0],
            ]
        }
        PatternKind::C4 | PatternKind::C5 | PatternKind::H1 | PatternKind::K16 => {
            apsp(&pattern.graph())?.to_rows()
        }
    })
}

fn lambda2_of(m: &[Vec<i64>]) -> f64 {
    eigenvalues(m)[1]
}

impl CompletionCase {
    pub fn new(pattern: PatternKind, slots: Slots) -> Result<Self> {
        let matrix = completion_matrix(pattern, slots)?;
        let lambda2 = lambda2_of(&matrix);
        Ok(CompletionCase {
            pattern,
            slots,
            matrix,
            lambda2,
        })
    }

    /// Exact number of distinct eigenvalues of the submatrix above θ.
    pub fn roots_above_theta(&self) -> usize {
        roots_above_theta(&self.matrix)
    }
}

/// Every completion considered when ruling out the six forbidden patterns: the
/// slot-free C4, C5, H1; P5 with far distance 4 (the path itself) and its eight
/// completions with `a, b, c ∈ {2, 3}`; four completions each of H2 and H3.
pub fn all_completion_cases() -> Vec<CompletionCase> {
    let mut out = Vec::new();
    for p in [PatternKind::C4, PatternKind::C5, PatternKind::H1] {
        out.push(CompletionCase::new(p, Slots::default()).unwrap());
    }
    let s3 = |a, b, c| Slots {
        a: Some(a),
        b: Some(b),
        c: Some(c),
    };
    out.push(CompletionCase::new(PatternKind::P5, s3(3, 4, 3)).unwrap());
    for a in [2, 3] {
        for b in [2, 3] {
            for c in [2, 3] {
                out.push(CompletionCase::new(PatternKind::P5, s3(a, b, c)).unwrap());
            }
        }
    }
    for p in [PatternKind::H2, PatternKind::H3] {
        for a in [2, 3] {
            for b in [2, 3] {
                let slots = Slots {
                    a: Some(a),
                    b: Some(b),
                    c: None,
                };
                out.push(CompletionCase::new(p, slots).unwrap());
            }
        }
    }
    out
}

thread_local! {
    static ABOVE_CACHE: RefCell<HashMap<Vec<i64>, usize>> = RefCell::new(HashMap::new());
}

/// Distinct roots above θ of the characteristic polynomial of a small integer
/// matrix, memoised per thread (pattern submatrices repeat heavily).
fn roots_above_theta(m: &[Vec<i64>]) -> usize {
    let key: Vec<i64> = m.iter().flatten().copied().collect();
    if let Some(c) = ABOVE_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return c;
    }
    let count = roots_above_theta_uncached(m);
    ABOVE_CACHE.with(|c| c.borrow_mut().insert(key, count));
    count
}

fn roots_above_theta_uncached(m: &[Vec<i64>]) -> usize {
    let p = char_poly_exact(m).expect("square matrix");
    SturmChain::new(p.poly()).count_above(&Theta::theta())
}

/// For every edge mask of a 4- or 5-vertex graph, the forbidden pattern it is
/// isomorphic to and the labelling (`label[i]` = local vertex playing `v_{i+1}`).
struct PatternTable {
    four: Vec<Option<(PatternKind, Vec<usize>)>>,
    five: Vec<Option<(PatternKind, Vec<usize>)>>,
}

fn local_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

fn build_table(k: usize) -> Vec<Option<(PatternKind, Vec<usize>)>> {
    let pairs = local_pairs(k);
    let kinds: Vec<PatternKind> = PatternKind::FORBIDDEN
        .into_iter()
        .filter(|p| p.order() == k)
        .collect();
    (0..1usize << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let g = Graph::from_edges(k, &edges).unwrap();
            kinds.iter().find_map(|&kind| {
                let p = kind.graph();
                if p.size() != g.size() {
                    return None;
                }
                find_induced_graph(&g, &p).map(|label| (kind, label))
            })
        })
        .collect()
}

static TABLE: Lazy<PatternTable> = Lazy::new(|| PatternTable {
    four: build_table(4),
    five: build_table(5),
});

/// Lexicographic k-subsets of `0..n`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn match_subset(g: &Graph, subset: &[usize]) -> Option<(PatternKind, Vec<usize>)> {
    let k = subset.len();
    let mut mask = 0usize;
    for (bit, (i, j)) in local_pairs(k).into_iter().enumerate() {
        if g.has_edge(subset[i], subset[j]) {
            mask |= 1 << bit;
        }
    }
    let entry = match k {
        4 => &TABLE.four[mask],
        5 => &TABLE.five[mask],
        _ => return None,
    };
    entry
        .as_ref()
        .map(|(kind, label)| (*kind, label.iter().map(|&l| subset[l]).collect()))
}

/// One induced occurrence of a forbidden pattern with its realised submatrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ForbiddenRecord {
    /// Host vertices in pattern order (`occurrence[i]` plays `v_{i+1}`).
    pub occurrence: Vec<usize>,
    pub case: CompletionCase,
}

fn record_for(dm: &DistanceMatrix, kind: PatternKind, occ: Vec<usize>) -> ForbiddenRecord {
    let matrix = dm.principal_submatrix(&occ).expect("valid occurrence");
    let slots = match kind {
        PatternKind::P5 => Slots {
            a: Some(dm.get(occ[0], occ[3])),
            b: Some(dm.get(occ[0], occ[4])),
            c: Some(dm.get(occ[1], occ[4])),
        },
        PatternKind::H2 | PatternKind::H3 => Slots {
            a: Some(dm.get(occ[0], occ[3])),
            b: Some(dm.get(occ[3], occ[4])),
            c: None,
        },
        _ => Slots::default(),
    };
    let lambda2 = lambda2_of(&matrix);
    ForbiddenRecord {
        occurrence: occ,
        case: CompletionCase {
            pattern: kind,
            slots,
            matrix,
            lambda2,
        },
    }
}

/// Every induced occurrence (one per vertex set) of C4, H1, C5, P5, H2, H3,
/// 4-sets before 5-sets, each in lexicographic order.
pub fn forbidden_scan(g: &Graph, dm: &DistanceMatrix) -> Vec<ForbiddenRecord> {
    let mut out = Vec::new();
    for k in [4, 5] {
        for_each_subset(g.order(), k, |s| {
            if let Some((kind, occ)) = match_subset(g, s) {
                out.push(record_for(dm, kind, occ));
            }
            true
        });
    }
    out
}

/// Evidence that λ₂(D(G)) > θ: a principal submatrix with two roots above θ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub pattern: PatternKind,
    pub slots: Slots,
    pub roots_above_theta: usize,
    pub lambda2: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    InFamily(FamilyDescriptor),
    AboveThreshold(Witness),
}

impl Classification {
    pub fn is_family(&self) -> bool {
        matches!(self, Classification::InFamily(_))
    }
}

/// First forbidden occurrence (4-sets before 5-sets, lexicographic) whose
/// submatrix has at least two distinct roots above θ.
pub fn find_witness(g: &Graph, dm: &DistanceMatrix) -> Option<Witness> {
    let mut found = None;
    for k in [4, 5] {
        for_each_subset(g.order(), k, |s| {
            if let Some((kind, occ)) = match_subset(g, s) {
                let matrix = dm.principal_submatrix(&occ).expect("valid occurrence");
                let above = roots_above_theta(&matrix);
                if above >= 2 {
                    let rec = record_for(dm, kind, occ);
                    found = Some(Witness {
                        vertices: rec.occurrence,
                        pattern: kind,
                        slots: rec.case.slots,
                        roots_above_theta: above,
                        lambda2: rec.case.lambda2,
                    });
                    return false;
                }
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// Family membership or a forbidden-pattern witness. Failing both would
/// contradict the classification theorem and is reported as an error.
pub fn classify_structural(g: &Graph) -> Result<Classification> {
    let dm = apsp(g)?;
    classify_structural_with(g, &dm)
}

pub fn classify_structural_with(g: &Graph, dm: &DistanceMatrix) -> Result<Classification> {
    if let Some(desc) = recognize(g)? {
        return Ok(Classification::InFamily(desc));
    }
    find_witness(g, dm)
        .map(Classification::AboveThreshold)
        .ok_or_else(|| Error::Contradiction {
            graph6: write_graph6(g),
        })
}

/// Exact λ₂ verdict against θ from the full distance polynomial.
pub fn classify_spectral(g: &Graph) -> Result<Lambda2Verdict> {
    let dm = apsp(g)?;
    let p = char_poly_exact(&dm.to_rows())?;
    lambda2_vs_threshold(&p)
}

/// Re-verifies a classification from scratch.
pub fn check_certificate(g: &Graph, c: &Classification) -> bool {
    match c {
        Classification::InFamily(desc) => {
            if desc.order() != g.order() {
                return false;
            }
            match desc.build() {
                Ok(h) => is_isomorphic(g, &h).unwrap_or(false),
                Err(_) => false,
            }
        }
        Classification::AboveThreshold(w) => {
            let Ok(dm) = apsp(g) else {
                return false;
            };
            let mut vs = w.vertices.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != w.vertices.len() || vs.len() > 5 {
                return false;
            }
            match dm.principal_submatrix(&w.vertices) {
                Ok(m) => roots_above_theta_uncached(&m) >= 2,
                Err(_) => false,
            }
        }
    }
}

/// JSON form of a classification together with the spectral verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<FamilyDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub lambda2_float: Option<f64>,
    pub exact: Option<Lambda2Verdict>,
}

impl ClassificationReport {
    pub fn new(c: &Classification, lambda2_float: Option<f64>, exact: Option<Lambda2Verdict>) -> Self {
        let (verdict, descriptor, witness) = match c {
            Classification::InFamily(d) => ("family", Some(d.clone()), None),
            Classification::AboveThreshold(w) => ("above", None, Some(w.clone())),
        };
        ClassificationReport {
            verdict: verdict.into(),
            descriptor,
            witness,
            lambda2_float,
            exact,
        }
    }
}

/// Structural and spectral classification of one graph.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let dm = apsp(g)?;
    let c = classify_structural_with(g, &dm)?;
    let (l2, exact) = if g.order() >= 2 {
        let rows = dm.to_rows();
        let p = char_poly_exact(&rows)?;
        (Some(eigenvalues(&rows)[1]), Some(lambda2_vs_threshold(&p)?))
    } else {
        (None, None)
    };
    Ok(ClassificationReport::new(&c, l2, exact))
}
