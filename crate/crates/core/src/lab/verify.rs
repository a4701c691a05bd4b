//! Named property suites with a pass/fail row per case.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::crosscheck::{family_cross_check, Collision};
use super::moments::moment_audit;
use crate::classifier::all_completion_cases;
use crate::error::{Error, Result};
use crate::families::{members_of_order, FamilyDescriptor};
use crate::graph::apsp;
use crate::spectra::sturm::{is_root, lambda2_against};
use crate::spectra::{char_poly_exact, lambda2_vs_threshold, sqrt2_minus_2, Lambda2Verdict, SturmChain};

/// Largest pendant-clique order checked by default.
pub const PENDANT_MAX_ORDER: usize = 14;
/// Largest cone order checked by default (parts summing to 11).
pub const CONE_MAX_ORDER: usize = 12;
/// Largest order for the distinctness suites.
pub const CROSS_MAX_ORDER: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Every forbidden pattern completion has two roots above θ.
    ForbiddenPatterns,
    /// Closed-form pendant-clique polynomial equals the computed one.
    PendantClosedForm,
    /// Closed-form cone polynomial equals the computed one.
    ConeClosedForm,
    /// λ₂ of every pendant clique is exactly √2 − 2.
    PendantThreshold,
    PendantDistinct,
    ConeDistinct,
    FamiliesDistinct,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::ForbiddenPatterns,
        Suite::PendantClosedForm,
        Suite::ConeClosedForm,
        Suite::PendantThreshold,
        Suite::PendantDistinct,
        Suite::ConeDistinct,
        Suite::FamiliesDistinct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ForbiddenPatterns => "forbidden-patterns",
            Suite::PendantClosedForm => "pendant-closed-form",
            Suite::ConeClosedForm => "cone-closed-form",
            Suite::PendantThreshold => "pendant-threshold",
            Suite::PendantDistinct => "pendant-distinct",
            Suite::ConeDistinct => "cone-distinct",
            Suite::FamiliesDistinct => "families-distinct",
        }
    }

    /// Short alias used on the command line.
    pub fn alias(self) -> &'static str {
        match self {
            Suite::ForbiddenPatterns => "lemma4",
            Suite::PendantClosedForm => "lemma6",
            Suite::ConeClosedForm => "lemma8",
            Suite::PendantThreshold => "corollary7",
            Suite::PendantDistinct => "theorem9",
            Suite::ConeDistinct => "theorem10",
            Suite::FamiliesDistinct => "theorem11",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.alias() == s)
            .ok_or_else(|| Error::Argument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

fn row(case: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckRow {
    CheckRow {
        case: case.into(),
        passed,
        detail: detail.into(),
    }
}

fn forbidden_patterns(decimals: usize) -> Vec<CheckRow> {
    all_completion_cases()
        .into_iter()
        .map(|c| {
            let slots: Vec<String> = [c.slots.a, c.slots.b, c.slots.c]
                .into_iter()
                .flatten()
                .map(|x| x.to_string())
                .collect();
            let case = if slots.is_empty() {
                c.pattern.to_string()
            } else {
                format!("{} ({})", c.pattern, slots.join(","))
            };
            let above = c.roots_above_theta();
            row(
                case,
                above >= 2,
                format!("λ₂ = {:.*}, {above} roots above θ", decimals, c.lambda2),
            )
        })
        .collect()
}

fn members_where(n: usize, keep: impl Fn(&FamilyDescriptor) -> bool) -> Vec<FamilyDescriptor> {
    members_of_order(n).into_iter().filter(|d| keep(d)).collect()
}

fn is_pendant(d: &FamilyDescriptor) -> bool {
    matches!(d, FamilyDescriptor::PendantClique { .. })
}

fn is_cone(d: &FamilyDescriptor) -> bool {
    matches!(d, FamilyDescriptor::ConeOfCliques { .. })
}

fn closed_form(n_max: usize, keep: fn(&FamilyDescriptor) -> bool) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let members = members_where(n, keep);
        if members.is_empty() {
            continue;
        }
        let mut bad = Vec::new();
        for d in &members {
            let direct = char_poly_exact(&apsp(&d.build()?)?.to_rows())?;
            if direct != d.closed_form_poly()? {
                bad.push(d.to_string());
            }
        }
        rows.push(row(
            format!("order {n}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} members agree", members.len())
            } else {
                format!("mismatch: {}", bad.join(" "))
            },
        ));
    }
    Ok(rows)
}

fn pendant_threshold(n_max: usize) -> Result<Vec<CheckRow>> {
    let t = sqrt2_minus_2();
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let mut bad = Vec::new();
        let members = members_where(n, is_pendant);
        for d in &members {
            let p = char_poly_exact(&apsp(&d.build()?)?.to_rows())?;
            let chain = SturmChain::new(p.poly());
            let ok = is_root(p.poly(), &t)
                && lambda2_against(&chain, &p, &t)? == Lambda2Verdict::Equal
                && lambda2_vs_threshold(&p)? == Lambda2Verdict::Below;
            if !ok {
                bad.push(d.to_string());
            }
        }
        rows.push(row(
            format!("order {n}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} members with λ₂ = √2 − 2, below θ", members.len())
            } else {
                format!("failed: {}", bad.join(" "))
            },
        ));
    }
    Ok(rows)
}

fn distinct(n_max: usize, kind: Collision) -> Result<Vec<CheckRow>> {
    let report = family_cross_check(n_max);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let clashes: Vec<&str> = report
            .issues
            .iter()
            .filter(|i| i.order == n && (i.kind == kind || i.kind == Collision::RoundTrip))
            .map(|i| i.detail.as_str())
            .collect();
        let mut detail = format!("{} members", report.members[n]);
        let mut passed = clashes.is_empty();
        if kind == Collision::AcrossFamilies {
            // the trace identity that separates pendant cliques from cones
            for d in members_where(n, is_pendant) {
                let a = moment_audit(&d.build()?)?;
                if !a.holds() {
                    passed = false;
                    detail = format!("trace identity fails for {d}");
                }
            }
        }
        if !clashes.is_empty() {
            detail = clashes.join("; ");
        }
        rows.push(row(format!("order {n}"), passed, detail));
    }
    Ok(rows)
}

/// Runs one suite. `decimals` only affects the displayed floats.
pub fn run_suite(suite: Suite, decimals: usize) -> Result<Vec<CheckRow>> {
    match suite {
        Suite::ForbiddenPatterns => Ok(forbidden_patterns(decimals)),
        Suite::PendantClosedForm => closed_form(PENDANT_MAX_ORDER, is_pendant),
        Suite::ConeClosedForm => closed_form(CONE_MAX_ORDER, is_cone),
        Suite::PendantThreshold => pendant_threshold(PENDANT_MAX_ORDER),
        Suite::PendantDistinct => distinct(CROSS_MAX_ORDER, Collision::WithinPendant),
        Suite::ConeDistinct => distinct(CROSS_MAX_ORDER, Collision::WithinCone),
        Suite::FamiliesDistinct => distinct(CROSS_MAX_ORDER, Collision::AcrossFamilies),
    }
}
