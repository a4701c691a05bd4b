//! Exact real-root counting with Sturm sequences and threshold decisions for
//! the second largest root.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::charpoly::CharPoly;
use super::poly::Poly;
use super::quad::{QuadAlg, Theta};
use crate::error::{Error, Result};

/// Sturm chain of the square-free part of a polynomial, kept primitive.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.square_free();
        let mut chain = vec![p0.clone()];
        if p0.degree() == Some(0) {
            return SturmChain { chain };
        }
        chain.push(p0.derivative().primitive());
        loop {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.degree() == Some(0) {
                break;
            }
            // prem = lc(b)^(δ+1)·rem; the chain needs −(positive multiple of rem)
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let lc_negative = b.leading().unwrap().is_negative();
            let flip = lc_negative && (delta + 1) % 2 == 1;
            let next = if flip { r } else { -&r };
            // divide by the positive content only, keeping the sign
            let c = next.content();
            let next = Poly::new(next.coeffs().iter().map(|x| x / &c).collect());
            chain.push(next);
        }
        SturmChain { chain }
    }

    pub fn square_free(&self) -> &Poly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            if p.leading().unwrap().is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }))
    }

    /// Number of distinct real roots strictly greater than `t`.
    pub fn count_above<const D: u64>(&self, t: &QuadAlg<D>) -> usize {
        let at_t = Self::variations(self.chain.iter().map(|p| t.sign_of(p)));
        at_t - self.variations_at_infinity()
    }
}

/// Distinct real roots of `p` strictly above `t`.
pub fn count_distinct_roots_above<const D: u64>(p: &Poly, t: &QuadAlg<D>) -> usize {
    SturmChain::new(p).count_above(t)
}

/// Position of the second largest root relative to a threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lambda2Verdict {
    Below,
    Equal,
    Above,
}

impl Lambda2Verdict {
    pub fn at_most(self) -> bool {
        self != Lambda2Verdict::Above
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Lambda2Verdict::Below => "below",
            Lambda2Verdict::Equal => "equal",
            Lambda2Verdict::Above => "above",
        }
    }
}

impl fmt::Display for Lambda2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_degree(p: &CharPoly) -> Result<()> {
    if p.degree() < 2 {
        return Err(Error::Argument(format!(
            "second eigenvalue needs order ≥ 2, got {}",
            p.degree()
        )));
    }
    Ok(())
}

/// Decides λ₂ against `t` for a polynomial whose largest root is simple and
/// exceeds `t` (true for distance matrices of connected graphs when `t < 0`).
pub fn lambda2_against<const D: u64>(
    chain: &SturmChain,
    p: &CharPoly,
    t: &QuadAlg<D>,
) -> Result<Lambda2Verdict> {
    check_degree(p)?;
    Ok(match chain.count_above(t) {
        0 => {
            return Err(Error::Argument(
                "largest root does not exceed the threshold".into(),
            ))
        }
        1 if t.sign_of(p.poly()) == Ordering::Equal => Lambda2Verdict::Equal,
        1 => Lambda2Verdict::Below,
        _ => Lambda2Verdict::Above,
    })
}

/// λ₂ against θ = (17 − √329)/2. `Equal` exactly when λ² − 17λ − 10 divides `p`.
pub fn lambda2_vs_threshold(p: &CharPoly) -> Result<Lambda2Verdict> {
    lambda2_vs_threshold_with(&SturmChain::new(p.poly()), p)
}

pub fn lambda2_vs_threshold_with(chain: &SturmChain, p: &CharPoly) -> Result<Lambda2Verdict> {
    check_degree(p)?;
    let count = chain.count_above(&Theta::theta());
    Ok(match count {
        0 => {
            return Err(Error::Argument(
                "largest root does not exceed the threshold".into(),
            ))
        }
        1 if p.poly().div_exact(&Theta::theta_minimal_poly()).is_some() => Lambda2Verdict::Equal,
        1 => Lambda2Verdict::Below,
        _ => Lambda2Verdict::Above,
    })
}

/// Largest `e` with `(λ − r)^e | p` for an integer root candidate.
pub fn root_multiplicity_int(p: &CharPoly, r: i64) -> usize {
    p.poly().multiplicity_of(&Poly::linear(r))
}

/// True when `p` vanishes at `t` exactly.
pub fn is_root<const D: u64>(p: &Poly, t: &QuadAlg<D>) -> bool {
    !p.is_zero() && t.sign_of(p) == Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::quad::{one_minus_sqrt3, sqrt2_minus_2};

    fn cp(c: &[i64]) -> CharPoly {
        CharPoly::from_poly(Poly::from_i64(c)).unwrap()
    }

    #[test]
    fn complete_graph_counts_one() {
        // K5: (λ − 4)(λ + 1)^4
        let p = &Poly::linear(4) * &Poly::linear(-1).pow(4);
        assert_eq!(count_distinct_roots_above(&p, &Theta::theta()), 1);
        assert_eq!(lambda2_vs_threshold(&CharPoly::from_poly(p).unwrap()).unwrap(), Lambda2Verdict::Below);
    }

    #[test]
    fn four_cycle_counts_two() {
        let p = &(&Poly::from_i64(&[0, 1]) * &Poly::linear(4)) * &Poly::linear(-2).pow(2);
        assert_eq!(count_distinct_roots_above(&p, &Theta::theta()), 2);
    }

    #[test]
    fn root_at_threshold_not_counted() {
        let p = Theta::theta_minimal_poly();
        assert_eq!(count_distinct_roots_above(&p, &Theta::theta()), 1);
        assert_eq!(lambda2_vs_threshold(&cp(&[-10, -17, 1])).unwrap(), Lambda2Verdict::Equal);
    }

    #[test]
    fn generic_threshold_matches() {
        // P3: λ₂ = 1 − √3 exactly
        let p = cp(&[-4, -6, 0, 1]);
        let chain = SturmChain::new(p.poly());
        assert_eq!(lambda2_against(&chain, &p, &one_minus_sqrt3()).unwrap(), Lambda2Verdict::Equal);
        assert_eq!(lambda2_against(&chain, &p, &QuadAlg::<3>::rational(-1, 1)).unwrap(), Lambda2Verdict::Above);
        assert_eq!(lambda2_against(&chain, &p, &sqrt2_minus_2()).unwrap(), Lambda2Verdict::Below);
        assert_eq!(lambda2_against(&chain, &p, &Theta::theta()).unwrap(), Lambda2Verdict::Below);
    }

    #[test]
    fn degree_guard() {
        assert!(lambda2_vs_threshold(&cp(&[0, 1])).is_err());
    }

    #[test]
    fn counts_against_brute_force_roots() {
        // product of (λ − r) for integer r with repeats
        let roots = [5, 3, 3, 0, -1, -1, -2, -7];
        let p = roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::linear(r));
        for t in -8..=6 {
            let mut distinct: Vec<i64> = roots.to_vec();
            distinct.dedup();
            let expected = distinct.iter().filter(|&&r| r > t).count();
            assert_eq!(count_distinct_roots_above(&p, &QuadAlg::<2>::rational(t, 1)), expected, "t={t}");
        }
        assert!(is_root(&p, &QuadAlg::<2>::rational(3, 1)));
        assert!(!is_root(&p, &QuadAlg::<2>::rational(4, 1)));
    }
}
