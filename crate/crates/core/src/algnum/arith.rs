//! Field operations and real roots via resultant compositions.

use super::{AlgError, AlgebraicNumber};
use crate::poly::{
    factor_rational, resultant_in_x, squarefree_part, DyadicInterval, IntPoly, SturmSequence,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Picks the irreducible factor of `composed` that owns the value bracketed by
/// `enclose(prec)` as `prec` grows.
///
/// A factor is accepted once it is the only candidate with a root in the
/// closed enclosure, it has exactly one root there, and neither endpoint is a
/// root.
pub(crate) fn select_root<F>(composed: &IntPoly, mut enclose: F) -> AlgebraicNumber
where
    F: FnMut(i64) -> DyadicInterval,
{
    let candidates = factor_rational(&squarefree_part(composed)).irreducibles();
    select_among(&candidates, &mut enclose)
}

pub(crate) fn select_among<F>(candidates: &[IntPoly], enclose: &mut F) -> AlgebraicNumber
where
    F: FnMut(i64) -> DyadicInterval,
{
    assert!(!candidates.is_empty(), "no candidate factors");
    let sturm: Vec<SturmSequence> = candidates.iter().map(SturmSequence::new).collect();
    let mut prec = 8;
    loop {
        let e = enclose(prec);
        let mut owner = None;
        let mut hits = 0;
        let mut clean = true;
        for (i, (c, s)) in candidates.iter().zip(&sturm).enumerate() {
            let lo_root = c.sign_at(&e.lo) == Ordering::Equal;
            let hi_root = c.sign_at(&e.hi) == Ordering::Equal;
            let n = if e.lo == e.hi {
                usize::from(lo_root)
            } else {
                s.count(&e.lo, &e.hi) + usize::from(lo_root)
            };
            if n > 0 {
                hits += 1;
                owner = Some(i);
                if n != 1 || lo_root || hi_root {
                    clean = false;
                }
            }
        }
        if hits == 1 {
            let i = owner.unwrap_or_default();
            if candidates[i].deg() == 1 {
                let r = BigRational::new(-candidates[i].coeff(0), candidates[i].coeff(1));
                return AlgebraicNumber::from_rational(&r);
            }
            if clean {
                return AlgebraicNumber::from_parts(candidates[i].clone(), e);
            }
        }
        prec = prec * 3 / 2;
    }
}

/// Guard bits added to operand precision when enclosing a combination.
fn operand_prec(a: &AlgebraicNumber, b: &AlgebraicNumber, prec: i64) -> i64 {
    let mag = |x: &AlgebraicNumber| x.isol.max_abs().magnitude_log2().max(0);
    prec + 2 + mag(a).max(mag(b))
}

impl AlgebraicNumber {
    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(r) = self.to_rational() {
            return AlgebraicNumber::from_rational(&-r);
        }
        AlgebraicNumber {
            minpoly: self.minpoly.negate_var().normalized(),
            isol: self.isol.neg(),
        }
    }

    pub fn add(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return AlgebraicNumber::from_rational(&(a + b));
        }
        if other.is_rational() {
            return shift(self, &other.to_rational().unwrap_or_default());
        }
        if self.is_rational() {
            return shift(other, &self.to_rational().unwrap_or_default());
        }
        let (p, q) = (&self.minpoly, &other.minpoly);
        let (n, m) = (p.deg(), q.deg());
        // Res_y(p(y), q(x - y))
        let composed = resultant_in_x(n * m, |x0| {
            let sub = IntPoly::new(vec![x0.clone(), BigInt::from(-1)]);
            (p.clone(), q.compose(&sub))
        });
        let (mut a, mut b) = (self.clone(), other.clone());
        select_root(&composed, |prec| {
            let k = operand_prec(&a, &b, prec);
            a = a.refined(k);
            b = b.refined(k);
            a.isol.add(&b.isol)
        })
    }

    pub fn sub(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        if self.is_zero() || other.is_zero() {
            return AlgebraicNumber::zero();
        }
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return AlgebraicNumber::from_rational(&(a * b));
        }
        if other.is_rational() {
            return scale(self, &other.to_rational().unwrap_or_default());
        }
        if self.is_rational() {
            return scale(other, &self.to_rational().unwrap_or_default());
        }
        let (p, q) = (&self.minpoly, &other.minpoly);
        let (n, m) = (p.deg(), q.deg());
        // Res_y(p(y), y^m q(x/y)) with y^m q(x0/y) = sum q_i x0^i y^(m-i)
        let composed = resultant_in_x(n * m, |x0| {
            let mut coeffs = vec![BigInt::zero(); m + 1];
            let mut pow = BigInt::one();
            for i in 0..=m {
                coeffs[m - i] = q.coeff(i) * &pow;
                pow *= x0;
            }
            (p.clone(), IntPoly::new(coeffs))
        });
        let (mut a, mut b) = (self.clone(), other.clone());
        select_root(&composed, |prec| {
            let k = operand_prec(&a, &b, prec);
            a = a.refined(k);
            b = b.refined(k);
            a.isol.mul(&b.isol)
        })
    }

    pub fn recip(&self) -> Result<AlgebraicNumber, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(AlgebraicNumber::from_rational(&r.recip()));
        }
        let rev = self.minpoly.reversed().normalized();
        let mut a = self.clone();
        let mut enclose = |prec: i64| {
            away_from_zero(&mut a);
            // |d(1/x)| <= 1/lo^2 on the interval
            let lo = a.isol.lo.abs().min(a.isol.hi.abs());
            let guard = (1 - lo.magnitude_log2()).max(0);
            a = a.refined(prec + 2 * guard + 2);
            a.isol.recip(prec + 2).expect("interval excludes zero")
        };
        Ok(select_among(&[rev], &mut enclose))
    }

    pub fn div(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: i64) -> Result<AlgebraicNumber, AlgError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        if let Some(r) = self.to_rational() {
            return Ok(AlgebraicNumber::from_rational(&num_traits::pow(r, e as usize)));
        }
        let mut result = AlgebraicNumber::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = AlgebraicNumber::mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = AlgebraicNumber::mul(&base, &base);
            }
        }
        Ok(result)
    }

    pub fn sqrt(&self) -> Result<AlgebraicNumber, AlgError> {
        self.real_root(2)
    }

    /// The real `k`-th root; for odd `k` and negative input the negative root.
    pub fn real_root(&self, k: i64) -> Result<AlgebraicNumber, AlgError> {
        if k < 2 {
            return Err(AlgError::InvalidRootDegree(k));
        }
        match self.signum() {
            Ordering::Equal => return Ok(AlgebraicNumber::zero()),
            Ordering::Less if k % 2 == 0 => return Err(AlgError::EvenRootOfNegative),
            Ordering::Less => return Ok(self.neg().real_root(k)?.neg()),
            Ordering::Greater => {}
        }
        let ku = k as usize;
        let composed = self.minpoly.substitute_power(ku);
        let mut a = self.clone();
        Ok(select_root(&composed, |prec| {
            away_from_zero(&mut a);
            let guard = (1 - a.isol.lo.magnitude_log2()).max(0);
            a = a.refined(prec + 2 + guard);
            a.isol.nth_root(k as u32, prec + 2).expect("positive interval")
        }))
    }
}

/// Narrows the isolating interval of a nonzero number until it excludes zero.
fn away_from_zero(a: &mut AlgebraicNumber) {
    while a.isol.contains_zero() {
        let w = a.isol.width().magnitude_log2();
        *a = a.refined(2 - w);
    }
}

/// `a + r` for rational `r = u/v`: roots of `v^n p((v x - u)/v)`.
fn shift(a: &AlgebraicNumber, r: &BigRational) -> AlgebraicNumber {
    if r.is_zero() {
        return a.clone();
    }
    let (u, v) = (r.numer(), r.denom());
    let minpoly = a.minpoly.affine_substitute(v, &-u, v).normalized();
    let mut a = a.clone();
    let rq = AlgebraicNumber::from_rational(r);
    select_among(&[minpoly], &mut |prec| {
        a = a.refined(prec + 1);
        a.isol.add(&rq.enclosure(prec + 1))
    })
}

/// `a * r` for nonzero rational `r = u/v`: roots of `u^n p(v x / u)`.
fn scale(a: &AlgebraicNumber, r: &BigRational) -> AlgebraicNumber {
    let (u, v) = (r.numer(), r.denom());
    let minpoly = a.minpoly.affine_substitute(v, &BigInt::zero(), u).normalized();
    let minpoly = if minpoly.leading_coeff().is_negative() { -minpoly } else { minpoly };
    let mut a = a.clone();
    let rq = AlgebraicNumber::from_rational(r);
    let mag = rq.isol.max_abs().magnitude_log2().max(0);
    select_among(&[minpoly], &mut |prec| {
        let k = prec + 2 + mag + a.isol.max_abs().magnitude_log2().max(0);
        a = a.refined(k);
        a.isol.mul(&rq.enclosure(k))
    })
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                AlgebraicNumber::$method(self, rhs)
            }
        }
        impl $tr for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                AlgebraicNumber::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &AlgebraicNumber {
    type Output = Result<AlgebraicNumber, AlgError>;
    fn div(self, rhs: &AlgebraicNumber) -> Self::Output {
        AlgebraicNumber::div(self, rhs)
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber::neg(self)
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_int(v)
    }

    fn sqrt(v: i64) -> AlgebraicNumber {
        int(v).sqrt().unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn square_of_root_two_is_two() {
        let s2 = sqrt(2);
        assert_eq!(s2.minpoly(), &poly(&[-2, 0, 1]));
        let prod = &s2 * &s2;
        assert!(prod.is_rational());
        assert_eq!(prod.minpoly(), &poly(&[-2, 1]));
    }

    #[test]
    fn sum_of_square_roots() {
        let s = &sqrt(2) + &sqrt(3);
        assert_eq!(s.minpoly(), &poly(&[1, 0, -10, 0, 1]));
        // integer square roots at 60 digits as an independent oracle
        let scale = num_traits::pow(BigInt::from(10), 120);
        let oracle = (BigInt::from(2) * &scale).sqrt() + (BigInt::from(3) * &scale).sqrt();
        let rendered = s.to_decimal(50).replace('.', "");
        assert_eq!(&rendered[..48], &oracle.to_string()[..48]);
        let diff = &sqrt(3) - &sqrt(2);
        assert_eq!(diff.minpoly(), &poly(&[1, 0, -10, 0, 1]));
        assert!(diff.to_f64() > 0.31 && diff.to_f64() < 0.32);
    }

    #[test]
    fn additive_identity() {
        let a = int(2).real_root(3).unwrap();
        let b = &a + &int(0);
        assert_eq!(b.minpoly(), a.minpoly());
        assert_eq!(a.compare(&b), Ordering::Equal);
    }

    #[test]
    fn real_roots() {
        assert_eq!(int(2).real_root(3).unwrap().minpoly(), &poly(&[-2, 0, 0, 1]));
        assert_eq!(int(3).real_root(4).unwrap().minpoly(), &poly(&[-3, 0, 0, 0, 1]));
        let neg = int(-2).real_root(3).unwrap();
        assert_eq!(neg.minpoly(), &poly(&[2, 0, 0, 1]));
        assert_eq!(neg.signum(), Ordering::Less);
        assert_eq!(int(-2).real_root(2).unwrap_err(), AlgError::EvenRootOfNegative);
        assert_eq!(int(2).real_root(1).unwrap_err(), AlgError::InvalidRootDegree(1));
        assert_eq!(int(4).sqrt().unwrap(), int(2));
        let half = AlgebraicNumber::from_ratio(1, 2).unwrap();
        assert_eq!(half.sqrt().unwrap().minpoly(), &poly(&[-1, 0, 2]));
        let c = AlgebraicNumber::from_ratio(-1, 3).unwrap().real_root(3).unwrap();
        assert_eq!(c.minpoly(), &poly(&[1, 0, 0, 3]));
        assert_eq!(c.to_decimal(6), "-0.693361");
        // sqrt(sqrt(3)) has the same minpoly as the fourth root
        let nested = sqrt(3).sqrt().unwrap();
        assert_eq!(nested, int(3).real_root(4).unwrap());
    }

    #[test]
    fn division_and_powers() {
        let s2 = sqrt(2);
        let inv = s2.recip().unwrap();
        assert_eq!(inv.minpoly(), &poly(&[-1, 0, 2]));
        assert_eq!((&int(1) / &s2).unwrap(), inv);
        assert_eq!(s2.pow(4).unwrap(), int(4));
        assert_eq!(s2.pow(-2).unwrap(), AlgebraicNumber::from_ratio(1, 2).unwrap());
        assert_eq!(int(0).recip().unwrap_err(), AlgError::DivisionByZero);
        let golden = (&(&int(1) + &sqrt(5)) / &int(2)).unwrap();
        assert_eq!(golden.minpoly(), &poly(&[-1, -1, 1]));
        assert_eq!(golden.to_decimal(10), "1.6180339887");
    }

    #[test]
    fn cancellation_to_rational() {
        let a = &(&sqrt(2) + &sqrt(3)) - &sqrt(3);
        assert_eq!(a, sqrt(2));
        let z = &sqrt(2) - &sqrt(2);
        assert!(z.is_zero());
        let c = int(2).real_root(3).unwrap();
        assert_eq!(c.pow(3).unwrap(), int(2));
    }

    #[test]
    fn cube_root_vs_square_root() {
        let c2 = int(2).real_root(3).unwrap();
        assert_eq!(c2.compare(&sqrt(2)), Ordering::Less);
        assert_eq!(c2.to_decimal(8), "1.25992105");
    }
}
