//! Closed-form polynomials of the three families, compared order by order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::families::{members_of_order, pendant_params_from_poly, reconstruct_cone_partition, FamilyDescriptor};
use crate::spectra::CharPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Collision {
    /// Two pendant cliques share a polynomial.
    WithinPendant,
    /// Two cones share a polynomial.
    WithinCone,
    /// Members of different families share a polynomial.
    AcrossFamilies,
    /// Parameters recovered from a polynomial differ from the member's own.
    RoundTrip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckIssue {
    pub kind: Collision,
    pub order: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub n_max: usize,
    /// Members checked per order, index = order.
    pub members: Vec<usize>,
    pub issues: Vec<CrossCheckIssue>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn count(&self, kind: Collision) -> usize {
        self.issues.iter().filter(|i| i.kind == kind).count()
    }
}

fn kind_of(a: &FamilyDescriptor, b: &FamilyDescriptor) -> Collision {
    use FamilyDescriptor::*;
    match (a, b) {
        (PendantClique { .. }, PendantClique { .. }) => Collision::WithinPendant,
        (ConeOfCliques { .. }, ConeOfCliques { .. }) => Collision::WithinCone,
        _ => Collision::AcrossFamilies,
    }
}

/// Checks, for every order up to `n_max`, that the closed-form polynomials
/// of all family members are pairwise distinct and that the spectral inverses
/// recover exactly the members they should.
pub fn family_cross_check(n_max: usize) -> CrossCheckReport {
    let mut report = CrossCheckReport {
        n_max,
        members: vec![0; n_max + 1],
        issues: Vec::new(),
    };
    for n in 1..=n_max {
        let members = members_of_order(n);
        report.members[n] = members.len();
        let mut seen: HashMap<CharPoly, &FamilyDescriptor> = HashMap::new();
        for d in &members {
            let p = d.closed_form_poly().expect("valid member");
            if let Some(prev) = seen.insert(p.clone(), d) {
                report.issues.push(CrossCheckIssue {
                    kind: kind_of(prev, d),
                    order: n,
                    detail: format!("{prev} and {d} share {p}"),
                });
            }
            let (want_cone, want_pendant) = match d {
                FamilyDescriptor::ConeOfCliques { parts } => (Some(parts.clone()), None),
                FamilyDescriptor::PendantClique { s, t } => (None, Some((*s, *t))),
                FamilyDescriptor::Complete { .. } => (None, None),
            };
            let got_cone = reconstruct_cone_partition(&p);
            let got_pendant = pendant_params_from_poly(&p);
            if got_cone != want_cone || got_pendant != want_pendant {
                report.issues.push(CrossCheckIssue {
                    kind: Collision::RoundTrip,
                    order: n,
                    detail: format!("{d}: cone {got_cone:?}, pendant {got_pendant:?}"),
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn up_to_ten() {
        let r = family_cross_check(10);
        assert!(r.passed(), "{:?}", r.issues);
        // K_10, four pendant cliques, 29 partitions of 9 into ≥ 2 parts
        assert_eq!(r.members[10], 1 + 4 + 29);
    }
}
