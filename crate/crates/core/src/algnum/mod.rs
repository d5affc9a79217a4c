//! Exact real algebraic numbers: an irreducible minimal polynomial together
//! with a dyadic interval isolating one of its real roots.

mod arith;
mod cyclo;
mod decimal;
mod named;

pub use cyclo::{cos2pi, cyclotomic};
pub use named::NamedConstant;

use crate::poly::{
    factor_rational, isolate_real_roots, refine_isolating, squarefree_part, Dyadic,
    DyadicInterval, IntPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("even root of a negative number")]
    EvenRootOfNegative,
    #[error("root degree must be at least 2, got {0}")]
    InvalidRootDegree(i64),
    #[error("denominator {0} is too large for cos2pi")]
    DenominatorTooLarge(BigInt),
}

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    isol: DyadicInterval,
}

impl AlgebraicNumber {
    pub fn from_rational(r: &BigRational) -> Self {
        let lo = Dyadic::from_int(r.floor().to_integer());
        let hi = Dyadic::from_int(r.ceil().to_integer());
        AlgebraicNumber {
            minpoly: IntPoly::linear_root(r),
            isol: DyadicInterval::new(lo, hi),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self, AlgError> {
        if den == 0 {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(Self::from_rational(&BigRational::new(num.into(), den.into())))
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Builds a number from an irreducible normalized polynomial and an
    /// interval holding exactly one of its roots, with non-root endpoints.
    /// Degree-1 inputs are canonicalized to the rational form.
    pub(crate) fn from_parts(minpoly: IntPoly, isol: DyadicInterval) -> Self {
        debug_assert!(minpoly.is_normalized());
        if minpoly.deg() == 1 {
            let r = BigRational::new(-minpoly.coeff(0), minpoly.coeff(1));
            return Self::from_rational(&r);
        }
        AlgebraicNumber { minpoly, isol }
    }

    /// Real roots of `p` in ascending order. `p` must be nonzero.
    pub fn real_roots_of(p: &IntPoly) -> Vec<AlgebraicNumber> {
        let mut out = Vec::new();
        if p.deg() == 0 {
            return out;
        }
        for f in factor_rational(&squarefree_part(p)).irreducibles() {
            for iv in isolate_real_roots(&f) {
                out.push(Self::from_parts(f.clone(), iv));
            }
        }
        out.sort();
        out
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn isolating_interval(&self) -> &DyadicInterval {
        &self.isol
    }

    pub fn is_rational(&self) -> bool {
        self.minpoly.deg() == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.minpoly.coeff(0).is_zero()
    }

    pub fn signum(&self) -> Ordering {
        if let Some(r) = self.to_rational() {
            return r.numer().sign_ordering();
        }
        if let Some(s) = self.isol.strict_sign() {
            return s;
        }
        // zero lies strictly inside the isolating interval and is not a root:
        // the root is on whichever side shows the sign change
        let at_lo = self.minpoly.sign_at(&self.isol.lo);
        let at_zero = self.minpoly.sign_at(&Dyadic::zero());
        if at_lo != at_zero {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// An enclosure of width at most `2^-prec`.
    pub fn enclosure(&self, prec: i64) -> DyadicInterval {
        self.refine(&Dyadic::pow2(-prec))
    }

    /// An interval of width at most `width` containing the number.
    pub fn refine(&self, width: &Dyadic) -> DyadicInterval {
        assert!(width.signum() == Ordering::Greater, "refine width must be positive");
        if self.isol.width() <= *width {
            return self.isol.clone();
        }
        match self.to_rational() {
            Some(r) => {
                let prec = -width.magnitude_log2() + 1;
                DyadicInterval::from_rational(&r, prec)
            }
            None => refine_isolating(&self.minpoly, &self.isol, width),
        }
    }

    /// The same number with its stored interval narrowed to width at most
    /// `2^-prec`.
    pub fn refined(&self, prec: i64) -> Self {
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            isol: self.enclosure(prec),
        }
    }

    /// Exact comparison.
    pub fn compare(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return a.cmp(&b);
        }
        if self.minpoly == other.minpoly {
            // both intervals isolate a root of the same squarefree polynomial:
            // if they share any point they isolate the same root
            if !self.isol.is_disjoint_from(&other.isol) {
                let lo = (&self.isol.lo).max(&other.isol.lo).clone();
                let hi = (&self.isol.hi).min(&other.isol.hi).clone();
                if lo < hi && crate::poly::sturm_count(&self.minpoly, &lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut prec = 8;
        loop {
            if a.isol.hi < b.isol.lo {
                return Ordering::Less;
            }
            if b.isol.hi < a.isol.lo {
                return Ordering::Greater;
            }
            a = a.refined(prec);
            b = b.refined(prec);
            prec *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        let iv = self.enclosure(60);
        iv.midpoint().to_f64()
    }

    /// Decimal rendering with `digits` digits after the point, correctly
    /// rounded (ties to even).
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal::render(self, digits)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<BigRational> for AlgebraicNumber {
    fn from(r: BigRational) -> Self {
        Self::from_rational(&r)
    }
}

impl From<i64> for AlgebraicNumber {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            None => write!(f, "root of {} in {}", self.minpoly, self.isol),
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_negative() {
            Ordering::Less
        } else if self.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_ratio(n, d).unwrap()
    }

    #[test]
    fn rationals_have_linear_minpolys() {
        assert_eq!(q(2, 1).minpoly().to_string(), "x - 2");
        assert_eq!(q(1, 3).minpoly().to_string(), "3x - 1");
        assert_eq!(q(-5, 2).minpoly().to_string(), "2x + 5");
        assert_eq!(AlgebraicNumber::from_ratio(1, 0).unwrap_err(), AlgError::ZeroDenominator);
    }

    #[test]
    fn signs() {
        assert_eq!(q(-5, 2).signum(), Ordering::Less);
        assert_eq!(q(0, 2).signum(), Ordering::Equal);
        let roots = AlgebraicNumber::real_roots_of(&IntPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].signum(), Ordering::Less);
        assert_eq!(roots[1].signum(), Ordering::Greater);
    }

    #[test]
    fn real_roots_sorted_across_factors() {
        // (x^2 - 2)(x - 1)(x + 3)
        let p = &(&IntPoly::from_i64s(&[-2, 0, 1]) * &IntPoly::from_i64s(&[-1, 1]))
            * &IntPoly::from_i64s(&[3, 1]);
        let r = AlgebraicNumber::real_roots_of(&p);
        let approx: Vec<f64> = r.iter().map(|a| a.to_f64()).collect();
        let expect = [-3.0, -std::f64::consts::SQRT_2, 1.0, std::f64::consts::SQRT_2];
        for (a, e) in approx.iter().zip(expect) {
            assert!((a - e).abs() < 1e-12);
        }
    }

    #[test]
    fn refine_width_and_containment() {
        let s2 = AlgebraicNumber::real_roots_of(&IntPoly::from_i64s(&[-2, 0, 1]))[1].clone();
        let w = Dyadic::pow2(-10);
        let iv = s2.refine(&w);
        assert!(iv.width() <= w);
        // bisection oracle on squares of dyadics
        let lo = iv.lo.to_rational();
        let hi = iv.hi.to_rational();
        let two = BigRational::from_integer(2.into());
        assert!(&lo * &lo < two && two < &hi * &hi);
        let third = q(1, 3).refine(&w);
        assert!(third.width() <= w);
        assert!(third.contains(&Dyadic::floor_rational(&BigRational::new(1.into(), 3.into()), 20)));
    }

    #[test]
    fn comparisons() {
        let s2 = AlgebraicNumber::real_roots_of(&IntPoly::from_i64s(&[-2, 0, 1]))[1].clone();
        let c2 = AlgebraicNumber::real_roots_of(&IntPoly::from_i64s(&[-2, 0, 0, 1]))[0].clone();
        assert_eq!(s2.compare(&q(3, 2)), Ordering::Less);
        assert_eq!(q(3, 2).compare(&s2), Ordering::Greater);
        assert_eq!(c2.compare(&s2), Ordering::Less);
        assert_eq!(s2.refined(40).compare(&s2), Ordering::Equal);
    }
}
