//! Exact univariate polynomial arithmetic over the integers.
//!
//! [`IntPoly`] is a dense coefficient vector indexed by exponent, always
//! trimmed so that the last entry (the leading coefficient) is nonzero. The
//! zero polynomial is the empty vector. Everything here is exact; no floating
//! point is used anywhere in this module tree.

mod dyadic;
mod factor;
mod gcd;
mod interp;
mod modular;
mod roots;
mod text;

pub use dyadic::{Dyadic, DyadicInterval};
pub use factor::{factor_rational, Factorization};
pub use gcd::{is_squarefree, resultant, squarefree_decomposition, squarefree_part, subresultant_gcd};
pub use interp::{interpolate_integer, resultant_in_x};
pub use roots::{cauchy_bound_log2, isolate_real_roots, sturm_count, SturmSequence};
pub(crate) use roots::refine_isolating;
pub(crate) use text::parse_poly_prefix;
pub use text::PolyParseError;
pub(crate) use modular::{factor_degrees_mod, primes_from};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Result of `lc(q)^scale_power * p = quotient * q + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivision {
    pub quotient: IntPoly,
    pub remainder: IntPoly,
    pub scale_power: u32,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `den * x - num`, the primitive linear polynomial vanishing at `num/den`.
    pub fn linear_root(r: &BigRational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()]).normalized()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the (positive) content; sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Content 1 and positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading_coeff().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.leading_coeff().is_positive() && self.content().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact sign of `p(x)` at a dyadic point.
    pub fn sign_at(&self, x: &Dyadic) -> Ordering {
        self.eval_scaled(x).sign_ordering()
    }

    /// `p(m/2^k) * 2^(k*deg)` as an integer, where `x = m/2^k` (or `p(x)` itself
    /// when `x` is an integer). Positive multiple of `p(x)`.
    fn eval_scaled(&self, x: &Dyadic) -> BigInt {
        if x.exponent() >= 0 {
            return self.eval(&x.to_bigint_exact());
        }
        let k = (-x.exponent()) as usize;
        let m = x.mantissa();
        let n = self.deg();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * m + (c << (k * (n - i)));
        }
        acc
    }

    /// `p(-x)`
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `x^deg * p(1/x)`
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `p(x^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Self::new(out)
    }

    /// `gamma^deg * p((alpha*x + beta)/gamma)`, an integer polynomial.
    pub fn affine_substitute(&self, alpha: &BigInt, beta: &BigInt, gamma: &BigInt) -> Self {
        let n = self.deg();
        let lin = IntPoly::new(vec![beta.clone(), alpha.clone()]);
        let mut result = IntPoly::zero();
        let mut lin_pow = IntPoly::one();
        let mut gamma_pows = vec![BigInt::one(); n + 1];
        for i in 1..=n {
            gamma_pows[i] = &gamma_pows[i - 1] * gamma;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                lin_pow = &lin_pow * &lin;
            }
            if !c.is_zero() {
                result = &result + &lin_pow.scale(&(c * &gamma_pows[n - i]));
            }
        }
        result
    }

    /// `p(q(x))`
    pub fn compose(&self, q: &IntPoly) -> Self {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &IntPoly::constant(c.clone());
        }
        acc
    }

    pub fn pseudo_divrem(&self, q: &IntPoly) -> Result<PseudoDivision, PolyError> {
        let dq = q.degree().ok_or(PolyError::DivisionByZero)?;
        let lq = q.leading_coeff();
        let dp = match self.degree() {
            Some(d) if d >= dq => d,
            _ => {
                return Ok(PseudoDivision {
                    quotient: IntPoly::zero(),
                    remainder: self.clone(),
                    scale_power: 0,
                })
            }
        };
        let scale_power = (dp - dq + 1) as u32;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let top = rem[i + dq].clone();
            for qc in quot.iter_mut() {
                *qc *= &lq;
            }
            quot[i] += &top;
            for r in rem.iter_mut().take(i + dq + 1) {
                *r *= &lq;
            }
            for (j, qj) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &top * qj;
            }
        }
        rem.truncate(dq);
        Ok(PseudoDivision {
            quotient: IntPoly::new(quot),
            remainder: IntPoly::new(rem),
            scale_power,
        })
    }

    /// `lc(q)^(deg p - deg q + 1) * p mod q`
    pub fn pseudo_rem(&self, q: &IntPoly) -> Result<IntPoly, PolyError> {
        let dq = q.degree().ok_or(PolyError::DivisionByZero)?;
        let lq = q.leading_coeff();
        let dp = match self.degree() {
            Some(d) if d >= dq => d,
            _ => return Ok(self.clone()),
        };
        let mut rem = self.coeffs.clone();
        for i in (0..=dp - dq).rev() {
            let top = rem[i + dq].clone();
            for r in rem.iter_mut().take(i + dq) {
                *r *= &lq;
            }
            rem[i + dq] = BigInt::zero();
            for (j, qj) in q.coeffs.iter().enumerate().take(dq) {
                rem[i + j] -= &top * qj;
            }
        }
        rem.truncate(dq);
        Ok(IntPoly::new(rem))
    }

    /// Exact division over the integers; `None` when `q` does not divide `self`.
    pub fn exact_div(&self, q: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
        let dq = q.degree().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Some(IntPoly::zero()));
        }
        let dp = self.deg();
        if dp < dq {
            return Ok(None);
        }
        let lq = q.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let top = &rem[i + dq];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&lq);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, qj) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * qj;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(quot)))
    }

    /// True when `q` divides `self` over the rationals.
    pub fn divisible_by(&self, q: &IntPoly) -> bool {
        match self.pseudo_rem(q) {
            Ok(r) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `x^k` where `k` is the multiplicity of the root 0.
    pub fn without_zero_roots(&self) -> Self {
        let k = self.zero_root_multiplicity();
        Self::new(self.coeffs[k..].to_vec())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => BigInt::zero(),
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Converts a rational-coefficient polynomial into a primitive integer one
/// with the same roots (clearing denominators).
pub fn from_rational_coeffs(coeffs: &[BigRational]) -> IntPoly {
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(c.denom());
    }
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
    )
    .primitive_part()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}
