use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{recognize, FamilyDescriptor};
use crate::graph::{apsp, Graph};
use crate::spectra::{char_poly_exact, CharPoly};

/// Second spectral moment checks for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentAudit {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    /// Σ λ, from the polynomial.
    pub moment1: i64,
    /// Σ λ², from the polynomial.
    pub moment2: i64,
    /// Σ_{i≠j} d_ij², from the matrix.
    pub sum_sq: i64,
    /// 4n(n−1) − 6m, asserted when the diameter is 2.
    pub diameter2_formula: Option<i64>,
    /// 4n(n−1) − 6m + 5t(t−1), asserted for pendant cliques.
    pub pendant_formula: Option<i64>,
}

impl MomentAudit {
    pub fn holds(&self) -> bool {
        self.moment1 == 0
            && self.moment2 == self.sum_sq
            && self.diameter2_formula.is_none_or(|x| x == self.moment2)
            && self.pendant_formula.is_none_or(|x| x == self.moment2)
    }
}

fn small(x: BigInt) -> i64 {
    i64::try_from(x).expect("moment fits in i64")
}

pub fn moment_audit_with(
    g: &Graph,
    diameter: u32,
    sum_sq: u64,
    p: &CharPoly,
    family: Option<&FamilyDescriptor>,
) -> MomentAudit {
    let n = g.order() as i64;
    let m = g.size() as i64;
    let base = 4 * n * (n - 1) - 6 * m;
    MomentAudit {
        n: g.order(),
        m: g.size(),
        diameter,
        moment1: small(p.power_sum_moment(1).unwrap()),
        moment2: small(p.power_sum_moment(2).unwrap()),
        sum_sq: sum_sq as i64,
        diameter2_formula: (diameter == 2).then_some(base),
        pendant_formula: match family {
            Some(FamilyDescriptor::PendantClique { t, .. }) => {
                let t = *t as i64;
                Some(base + 5 * t * (t - 1))
            }
            _ => None,
        },
    }
}

/// Trace identities Σλ = 0 and Σλ² = Σ d_ij², plus the closed forms for
/// diameter-2 graphs and pendant cliques.
pub fn moment_audit(g: &Graph) -> Result<MomentAudit> {
    let dm = apsp(g)?;
    let p = char_poly_exact(&dm.to_rows())?;
    let family = recognize(g)?;
    Ok(moment_audit_with(
        g,
        dm.diameter(),
        dm.sum_of_squares(),
        &p,
        family.as_ref(),
    ))
}
