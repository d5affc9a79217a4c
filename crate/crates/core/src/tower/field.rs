//! Simple number fields `Q(theta)` and polynomials over them.

use super::qpoly::QPoly;
use crate::poly::{
    factor_rational, is_squarefree, isolate_real_roots, resultant_in_x, DyadicInterval, IntPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("generator polynomial {0} is not irreducible")]
    Reducible(String),
    #[error("generator polynomial must have degree at least 1")]
    Constant,
}

/// Where the generator sits: a real root, or one of a complex-conjugate pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    Real(DyadicInterval),
    ComplexPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    gen_minpoly: IntPoly,
    modulus: QPoly,
    embedding: Embedding,
}

/// An element of a number field as a rational polynomial in the generator,
/// reduced modulo its minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FieldElement {
    rep: QPoly,
}

impl FieldElement {
    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn rational(&self) -> Option<BigRational> {
        (self.rep.deg() == 0).then(|| self.rep.coeff(0))
    }
}

impl NumberField {
    pub fn new(gen_minpoly: &IntPoly) -> Result<Self, FieldError> {
        if gen_minpoly.deg() == 0 {
            return Err(FieldError::Constant);
        }
        let f = gen_minpoly.normalized();
        if !factor_rational(&f).is_irreducible() {
            return Err(FieldError::Reducible(f.to_string()));
        }
        Ok(Self::new_unchecked(f))
    }

    /// `f` must be normalized and irreducible.
    pub(crate) fn new_unchecked(f: IntPoly) -> Self {
        let embedding = match isolate_real_roots(&f).into_iter().next() {
            Some(iv) => Embedding::Real(iv),
            None => Embedding::ComplexPair,
        };
        NumberField {
            modulus: QPoly::from_int_poly(&f),
            gen_minpoly: f,
            embedding,
        }
    }

    pub fn rationals() -> Self {
        Self::new_unchecked(IntPoly::x())
    }

    pub fn gen_minpoly(&self) -> &IntPoly {
        &self.gen_minpoly
    }

    pub fn degree(&self) -> usize {
        self.gen_minpoly.deg()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn element(&self, rep: QPoly) -> FieldElement {
        FieldElement { rep: rep.rem(&self.modulus) }
    }

    pub fn from_rational(&self, r: BigRational) -> FieldElement {
        FieldElement { rep: QPoly::constant(r) }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::default()
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn generator(&self) -> FieldElement {
        self.element(QPoly::x())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { rep: a.rep.add(&b.rep) }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { rep: a.rep.sub(&b.rep) }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { rep: a.rep.neg() }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.element(a.rep.mul(&b.rep))
    }

    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        let (_, s) = a.rep.inverse_mod(&self.modulus);
        Some(FieldElement { rep: s })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Option<FieldElement> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Lifts an integer polynomial into `K[x]`.
    pub fn lift(&self, f: &IntPoly) -> KPoly {
        KPoly::new(
            f.coeffs()
                .iter()
                .map(|c| self.from_rational(BigRational::from_integer(c.clone())))
                .collect(),
        )
    }

    pub fn poly_add(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let n = a.0.len().max(b.0.len());
        KPoly::new((0..n).map(|i| self.add(&a.coeff(i), &b.coeff(i))).collect())
    }

    pub fn poly_mul(&self, a: &KPoly, b: &KPoly) -> KPoly {
        if a.is_zero() || b.is_zero() {
            return KPoly::default();
        }
        // multiply unreduced representatives and reduce once per coefficient
        let mut out = vec![QPoly::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.rep.mul(&y.rep));
            }
        }
        KPoly::new(out.into_iter().map(|r| self.element(r)).collect())
    }

    pub fn poly_divrem(&self, a: &KPoly, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if a.0.len() < d.0.len() {
            return (KPoly::default(), a.clone());
        }
        let inv = self.inv(&d.leading()).expect("nonzero leading coefficient");
        let mut r = a.0.clone();
        let dd = d.deg();
        let mut q = vec![FieldElement::default(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = self.mul(&r[i + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[i + j] = self.sub(&r[i + j], &self.mul(&c, b));
            }
            q[i] = c;
        }
        r.truncate(dd);
        (KPoly::new(q), KPoly::new(r))
    }

    pub fn poly_monic(&self, a: &KPoly) -> KPoly {
        if a.is_zero() {
            return a.clone();
        }
        let inv = self.inv(&a.leading()).expect("nonzero leading coefficient");
        KPoly::new(a.0.iter().map(|c| self.mul(c, &inv)).collect())
    }

    pub fn poly_gcd(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.poly_divrem(&a, &b).1;
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    /// `Norm_{K/Q}(f(x - s theta)) = Res_y(m(y), f(x - s y))`.
    pub fn shifted_norm(&self, f: &IntPoly, s: i64) -> IntPoly {
        let m = &self.gen_minpoly;
        let bound = f.deg() * m.deg();
        resultant_in_x(bound, |x0| {
            let sub = IntPoly::new(vec![x0.clone(), BigInt::from(-s)]);
            (m.clone(), f.compose(&sub))
        })
    }

    /// First shift `s` (0 for the rationals, otherwise 1, 2, ...) with a
    /// squarefree norm, together with that norm.
    pub fn squarefree_norm(&self, f: &IntPoly) -> (i64, IntPoly) {
        let mut s = if self.degree() == 1 { 0 } else { 1 };
        loop {
            let n = self.shifted_norm(f, s);
            if is_squarefree(&n) {
                return (s, n);
            }
            s += 1;
        }
    }

    /// Irreducible monic factors of a rationally squarefree `f` over this field.
    pub fn factor(&self, f: &IntPoly) -> Vec<KPoly> {
        let f = f.normalized();
        if f.deg() <= 1 {
            return vec![self.poly_monic(&self.lift(&f))];
        }
        let (s, norm) = self.squarefree_norm(&f);
        let factors = factor_rational(&norm).irreducibles();
        let lifted_f = self.lift(&f);
        if factors.len() == 1 {
            return vec![self.poly_monic(&lifted_f)];
        }
        // x + s theta
        let shift = KPoly::new(vec![
            self.mul(&self.from_rational(BigRational::from_integer(s.into())), &self.generator()),
            self.one(),
        ]);
        let mut out = Vec::new();
        for n_i in factors {
            let mut acc = KPoly::default();
            for c in n_i.coeffs().iter().rev() {
                acc = self.poly_mul(&acc, &shift);
                acc = self.poly_add(&acc, &KPoly::new(vec![self.from_rational(BigRational::from_integer(c.clone()))]));
            }
            out.push(self.poly_gcd(&lifted_f, &acc));
        }
        out.sort_by_key(KPoly::deg);
        out
    }
}

/// Polynomial over a number field, coefficients indexed by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KPoly(Vec<FieldElement>);

impl KPoly {
    pub fn new(mut c: Vec<FieldElement>) -> Self {
        while c.last().is_some_and(FieldElement::is_zero) {
            c.pop();
        }
        KPoly(c)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> FieldElement {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.rep.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn product(k: &NumberField, fs: &[KPoly]) -> KPoly {
        fs.iter().fold(KPoly::new(vec![k.one()]), |acc, f| k.poly_mul(&acc, f))
    }

    #[test]
    fn field_inverse() {
        let k = NumberField::new(&p(&[-2, 0, 0, 1])).unwrap();
        let t = k.generator();
        let a = k.add(&t, &k.one());
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
        assert!(NumberField::new(&p(&[-4, 0, 1])).is_err());
    }

    #[test]
    fn root_two_splits_over_itself() {
        let k = NumberField::new(&p(&[-2, 0, 1])).unwrap();
        let fs = k.factor(&p(&[-2, 0, 1]));
        assert_eq!(fs.len(), 2);
        let t = k.generator();
        let lin: Vec<FieldElement> = fs.iter().map(|f| f.coeff(0)).collect();
        assert!(lin.contains(&t) && lin.contains(&k.neg(&t)));
        assert_eq!(product(&k, &fs), k.lift(&p(&[-2, 0, 1])));
    }

    #[test]
    fn cube_root_field_leaves_quadratic() {
        let k = NumberField::new(&p(&[-2, 0, 0, 1])).unwrap();
        let fs = k.factor(&p(&[-2, 0, 0, 1]));
        assert_eq!(fs.iter().map(KPoly::deg).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(fs[0].coeff(0), k.neg(&k.generator()));
        assert_eq!(product(&k, &fs), k.lift(&p(&[-2, 0, 0, 1])));
        assert!(matches!(k.embedding(), Embedding::Real(_)));
    }

    #[test]
    fn three_stays_irreducible_over_root_two() {
        let k = NumberField::new(&p(&[-2, 0, 1])).unwrap();
        let fs = k.factor(&p(&[-3, 0, 1]));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].deg(), 2);
    }

    #[test]
    fn complex_generator() {
        let k = NumberField::new(&p(&[1, 0, 1])).unwrap();
        assert_eq!(k.embedding(), &Embedding::ComplexPair);
        assert_eq!(k.factor(&p(&[1, 0, 1])).len(), 2);
    }
}
