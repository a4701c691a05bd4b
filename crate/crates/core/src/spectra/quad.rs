//! Exact scalars `a + b·√D` with rational `a`, `b` and a fixed square-free radicand.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadAlg<const D: u64> {
    pub a: BigRational,
    pub b: BigRational,
}

/// `(17 − √329)/2`, the threshold for the second distance eigenvalue.
pub type Theta = QuadAlg<329>;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of `a + b√d` for integers `a`, `b` and `d > 0`.
pub(crate) fn sign_surd(a: &BigInt, b: &BigInt, d: u64) -> Ordering {
    let sa = a.sign_cmp();
    let sb = b.sign_cmp();
    match (sa, sb) {
        (_, Ordering::Equal) => sa,
        (Ordering::Equal, _) => sb,
        _ if sa == sb => sa,
        _ => {
            let lhs = a * a;
            let rhs = b * b * BigInt::from(d);
            match lhs.cmp(&rhs) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl<const D: u64> QuadAlg<D> {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadAlg { a, b }
    }

    /// `an/ad + (bn/bd)·√D`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QuadAlg::new(ratio(an, ad), ratio(bn, bd))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        QuadAlg::new(ratio(n, d), BigRational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Common denominator form `(p + q√D)/r` with `r > 0`.
    fn integral(&self) -> (BigInt, BigInt, BigInt) {
        let r = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&r / self.a.denom());
        let q = self.b.numer() * (&r / self.b.denom());
        (p, q, r)
    }

    pub fn sign(&self) -> Ordering {
        let (p, q, _) = self.integral();
        sign_surd(&p, &q, D)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * (D as f64).sqrt()
    }

    /// Sign of `poly(self)`, computed exactly.
    pub fn sign_of(&self, poly: &Poly) -> Ordering {
        let (p, q, r) = self.integral();
        // Horner on r^deg · poly((p + q√D)/r) in Z[√D]
        let d = BigInt::from(D);
        let (mut x, mut y) = (BigInt::zero(), BigInt::zero());
        let mut rpow = BigInt::from(1);
        for c in poly.coeffs().iter().rev() {
            let nx = &x * &p + &y * &q * &d + c * &rpow;
            let ny = &x * &q + &y * &p;
            x = nx;
            y = ny;
            rpow *= &r;
        }
        sign_surd(&x, &y, D)
    }

    /// Exact comparison of two values in the same field.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let diff = QuadAlg::<D>::new(&self.a - &other.a, &self.b - &other.b);
        diff.sign()
    }
}

impl Theta {
    pub fn theta() -> Self {
        QuadAlg::from_ratios(17, 2, -1, 2)
    }

    /// `λ² − 17λ − 10`, the minimal polynomial of the threshold.
    pub fn theta_minimal_poly() -> Poly {
        Poly::from_i64(&[-10, -17, 1])
    }
}

/// `1 − √3`, the second distance eigenvalue of the path on three vertices.
pub fn one_minus_sqrt3() -> QuadAlg<3> {
    QuadAlg::from_ratios(1, 1, -1, 1)
}

/// `√2 − 2`, the second distance eigenvalue of the pendant-clique family.
pub fn sqrt2_minus_2() -> QuadAlg<2> {
    QuadAlg::from_ratios(-2, 1, 1, 1)
}

impl<const D: u64> fmt::Display for QuadAlg<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})√{}", self.a, self.b, D)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_value_and_root() {
        let t = Theta::theta();
        assert!((t.to_f64() + 0.569_178).abs() < 1e-5);
        assert_eq!(t.sign(), Ordering::Less);
        assert_eq!(t.sign_of(&Theta::theta_minimal_poly()), Ordering::Equal);
        // sum of roots 17, product −10
        let p = Theta::theta_minimal_poly();
        assert_eq!(p.coeff(1), BigInt::from(-17));
        assert_eq!(p.coeff(0), BigInt::from(-10));
    }

    #[test]
    fn sign_bookkeeping() {
        assert_eq!(QuadAlg::<2>::from_ratios(-2, 1, 1, 1).sign(), Ordering::Less);
        assert_eq!(QuadAlg::<2>::from_ratios(2, 1, -1, 1).sign(), Ordering::Greater);
        assert_eq!(QuadAlg::<2>::from_ratios(1, 1, 1, 1).sign(), Ordering::Greater);
        assert_eq!(QuadAlg::<2>::from_ratios(-1, 1, -1, 3).sign(), Ordering::Less);
        assert_eq!(QuadAlg::<4>::from_ratios(2, 1, -1, 1).sign(), Ordering::Equal);
        assert_eq!(QuadAlg::<2>::rational(0, 1).sign(), Ordering::Equal);
    }

    #[test]
    fn ordering_of_constants() {
        // −1 < 1−√3 < √2−2 < θ
        assert_eq!(one_minus_sqrt3().cmp_value(&QuadAlg::rational(-1, 1)), Ordering::Greater);
        assert!(one_minus_sqrt3().to_f64() < sqrt2_minus_2().to_f64());
        assert!(sqrt2_minus_2().to_f64() < Theta::theta().to_f64());
    }

    #[test]
    fn evaluates_polynomials() {
        // λ² + 4λ + 2 vanishes at √2 − 2
        let q = Poly::from_i64(&[2, 4, 1]);
        assert_eq!(sqrt2_minus_2().sign_of(&q), Ordering::Equal);
        // λ³ − 6λ − 4 vanishes at 1 − √3
        assert_eq!(one_minus_sqrt3().sign_of(&Poly::from_i64(&[-4, -6, 0, 1])), Ordering::Equal);
        // x − 1/3 at 1/2 is positive
        let half = QuadAlg::<3>::rational(1, 2);
        assert_eq!(half.sign_of(&Poly::from_i64(&[-1, 3])), Ordering::Greater);
    }
}
