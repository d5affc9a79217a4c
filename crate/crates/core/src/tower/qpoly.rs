//! Dense polynomials with rational coefficients.

use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.0.len() < d.0.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.leading().recip();
        let mut r = self.0.clone();
        let dd = d.deg();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[i + j] -= &c * b;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// `(g, s)` with `s * self = g (mod m)` and `g = gcd(self, m)` monic.
    pub fn inverse_mod(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Self::zero(), Self::constant(BigRational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    /// Integer polynomial with the same roots (denominators cleared, primitive).
    pub fn to_int_poly(&self) -> IntPoly {
        let l = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(self.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
            .primitive_part()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_int_poly(&IntPoly::from_i64s(c))
    }

    #[test]
    fn division_identity() {
        let a = q(&[1, 2, 3, 4, 5]);
        let b = q(&[3, 0, 2]);
        let (quot, rem) = a.divrem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.deg() < b.deg());
    }

    #[test]
    fn inverse_modulo() {
        let m = q(&[-2, 0, 1]);
        let a = q(&[1, 1]);
        let (g, s) = a.inverse_mod(&m);
        assert_eq!(g, q(&[1]));
        assert_eq!(s.mul(&a).rem(&m), q(&[1]));
    }
}
