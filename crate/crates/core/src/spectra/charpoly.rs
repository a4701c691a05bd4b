//! Exact characteristic polynomials by Berkowitz's division-free algorithm.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Ring operations that may refuse to overflow.
trait CheckedRing: Clone + Sized {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn from_i64(x: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl CheckedRing for i128 {
    fn ring_zero() -> Self {
        0
    }
    fn ring_one() -> Self {
        1
    }
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl CheckedRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Coefficients of det(λI − A), highest degree first.
fn berkowitz<T: CheckedRing>(a: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = a.len();
    let at = |i: usize, j: usize| T::from_i64(a[i][j]);
    // characteristic vector of the trailing (empty) submatrix
    let mut poly: Vec<T> = vec![T::ring_one()];
    for k in (0..n).rev() {
        // M = A[k.., k..] = [[a, R], [C, A1]], A1 = A[k+1.., k+1..]
        let size = n - k;
        let sub = size - 1;
        // column of the Toeplitz matrix: 1, −a, −R C, −R A1 C, …
        let mut col: Vec<T> = Vec::with_capacity(size + 1);
        col.push(T::ring_one());
        col.push(at(k, k).neg()?);
        let mut v: Vec<T> = (0..sub).map(|i| at(k + 1 + i, k)).collect();
        for step in 0..sub {
            let mut dot = T::ring_zero();
            for (j, vj) in v.iter().enumerate() {
                dot = dot.add(&at(k, k + 1 + j).mul(vj)?)?;
            }
            col.push(dot.neg()?);
            if step + 1 < sub {
                let mut w = Vec::with_capacity(sub);
                for i in 0..sub {
                    let mut s = T::ring_zero();
                    for (j, vj) in v.iter().enumerate() {
                        s = s.add(&at(k + 1 + i, k + 1 + j).mul(vj)?)?;
                    }
                    w.push(s);
                }
                v = w;
            }
        }
        // new poly (length size+1) = lower-triangular Toeplitz(col) · poly (length size)
        let mut next = Vec::with_capacity(size + 1);
        for i in 0..=size {
            let mut s = T::ring_zero();
            for (j, pj) in poly.iter().enumerate() {
                if i >= j {
                    s = s.add(&col[i - j].mul(pj)?)?;
                }
            }
            next.push(s);
        }
        poly = next;
    }
    Some(poly)
}

/// Exact monic characteristic polynomial det(λI − D) of a square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly(Poly);

impl CharPoly {
    /// Wraps a monic polynomial.
    pub fn from_poly(p: Poly) -> Result<Self> {
        match p.leading() {
            Some(l) if l.is_one() => Ok(CharPoly(p)),
            _ => Err(Error::Argument(format!("polynomial {p} is not monic"))),
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap()
    }

    /// Coefficient `c_i` of `λ^i`.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.coeff(i)
    }

    /// Exact serialisation: decimal coefficients, constant term first, leading 1 included.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.0.coeffs().iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    pub fn parse_key(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Argument(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CharPoly::from_poly(Poly::new(coeffs))
    }

    /// Largest `e` such that `(λ − r)^e` divides the polynomial.
    pub fn root_multiplicity(&self, r: &BigRational) -> usize {
        let linear = Poly::new(vec![-r.numer().clone(), r.denom().clone()]);
        self.0.multiplicity_of(&linear)
    }

    /// Power sums of the roots via Newton's identities (`k` ∈ {1, 2}).
    pub fn power_sum_moment(&self, k: u32) -> Result<BigInt> {
        let n = self.degree();
        let c1 = if n >= 1 { self.coeff(n - 1) } else { BigInt::zero() };
        let c2 = if n >= 2 { self.coeff(n - 2) } else { BigInt::zero() };
        match k {
            1 => Ok(-c1),
            2 => Ok(&c1 * &c1 - BigInt::from(2) * c2),
            _ => Err(Error::Argument(format!("moment {k} not supported (use 1 or 2)"))),
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// det(λI − A) for a square integer matrix, without rounding.
pub fn char_poly_exact(a: &[Vec<i64>]) -> Result<CharPoly> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Argument("matrix is not square".into()));
    }
    let high_first: Vec<BigInt> = match berkowitz::<i128>(a) {
        Some(v) => v.into_iter().map(CheckedRing::into_big).collect(),
        None => berkowitz::<BigInt>(a).expect("bigint arithmetic cannot overflow"),
    };
    let mut coeffs = high_first;
    coeffs.reverse();
    Ok(CharPoly(Poly::new(coeffs)))
}
