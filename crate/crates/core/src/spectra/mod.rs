//! Exact characteristic polynomials, exact root localisation against quadratic
//! irrational thresholds, and floating spectra for display.

pub mod charpoly;
pub mod eigen;
pub mod poly;
pub mod quad;
pub mod sturm;

pub use charpoly::{char_poly_exact, CharPoly};
pub use eigen::{eigenvalues, SpectrumSummary};
pub use poly::Poly;
pub use quad::{one_minus_sqrt3, sqrt2_minus_2, QuadAlg, Theta};
pub use sturm::{count_distinct_roots_above, lambda2_vs_threshold, Lambda2Verdict, SturmChain};

use crate::error::Result;
use crate::graph::DistanceMatrix;

/// Floating spectrum plus the exact θ verdict of a distance matrix.
pub fn summarize(dm: &DistanceMatrix) -> Result<SpectrumSummary> {
    let rows = dm.to_rows();
    let p = char_poly_exact(&rows)?;
    let lambda2_exact = if dm.order() >= 2 {
        Some(lambda2_vs_threshold(&p)?)
    } else {
        None
    };
    Ok(SpectrumSummary {
        eigen: eigenvalues(&rows),
        lambda2_exact,
    })
}
