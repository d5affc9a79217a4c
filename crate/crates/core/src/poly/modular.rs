//! Polynomials over a small prime field, used internally by the rational
//! factorizer (distinct-degree and Cantor-Zassenhaus splitting).

use super::IntPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

pub(crate) type FpPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub p: u64,
}

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        PrimeField { p }
    }

    fn mul_el(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow_el(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_el(r, b);
            }
            b = self.mul_el(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv_el(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow_el(a, self.p - 2)
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap_or(0)
    }

    pub fn from_int_poly(&self, f: &IntPoly) -> FpPoly {
        trim(f.coeffs().iter().map(|c| self.reduce_int(c)).collect())
    }

    #[cfg(test)]
    pub fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        let p = self.p as u128;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % p;
            }
        }
        trim(out.into_iter().map(|v| v as u64).collect())
    }

    pub fn scale(&self, a: &FpPoly, c: u64) -> FpPoly {
        trim(a.iter().map(|&x| self.mul_el(x, c)).collect())
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv_el(l)),
        }
    }

    pub fn divrem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv_el(*b.last().unwrap_or(&1));
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mul_el(r[i + db], inv);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + self.p - self.mul_el(c, bj)) % self.p;
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g = gcd(a, b)`, `g` monic.
    pub fn ext_gcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv_el(*r0.last().unwrap_or(&1));
        (
            self.scale(&r0, inv),
            self.scale(&s0, inv),
            self.scale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &FpPoly) -> FpPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul_el(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &FpPoly, exp: &BigUint, m: &FpPoly) -> FpPoly {
        let mut result: FpPoly = vec![1];
        let base = self.rem(base, m);
        let bits = exp.bits();
        for i in (0..bits).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &base), m);
            }
        }
        self.rem(&result, m)
    }

    pub fn is_squarefree(&self, f: &FpPoly) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self, f: &FpPoly) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: FpPoly = vec![0, 1];
        let mut h = x.clone();
        let pbig = BigUint::from(self.p);
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                let deg = f.len() - 1;
                out.push((f.clone(), deg));
                break;
            }
            h = self.powmod(&h, &pbig, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor-Zassenhaus equal-degree splitting of a monic product of
    /// irreducibles of degree `d`.
    pub fn equal_degree<R: Rng>(&self, f: &FpPoly, d: usize, rng: &mut R) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.clone()];
        }
        let exp: BigUint = (num_traits::pow(BigUint::from(self.p), d) - 1u32) / 2u32;
        loop {
            let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() <= 1 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.powmod(&a, &exp, f);
                let g = self.gcd(&self.sub(&b, &vec![1]), f);
                if g.len() <= 1 || g.len() == f.len() {
                    continue;
                }
                g
            };
            let other = self.divrem(f, &split).0;
            let mut out = self.equal_degree(&split, d, rng);
            out.extend(self.equal_degree(&self.monic(&other), d, rng));
            return out;
        }
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, without
    /// splitting them apart.
    pub fn factor_degrees(&self, f: &FpPoly) -> Vec<usize> {
        let f = self.monic(f);
        let mut degs = Vec::new();
        for (g, d) in self.distinct_degree(&f) {
            let count = (g.len() - 1) / d;
            degs.extend(std::iter::repeat(d).take(count));
        }
        degs
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor<R: Rng>(&self, f: &FpPoly, rng: &mut R) -> Vec<FpPoly> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}

/// Factor degrees of `f` modulo `p`, or `None` when `p` divides the leading
/// coefficient or `f` is not squarefree modulo `p`.
pub(crate) fn factor_degrees_mod(f: &IntPoly, p: u64) -> Option<Vec<usize>> {
    let fp = PrimeField::new(p);
    let g = fp.from_int_poly(f);
    if g.len() != f.deg() + 1 || !fp.is_squarefree(&g) {
        return None;
    }
    Some(fp.factor_degrees(&g))
}

/// Small primes for modular factorization.
pub(crate) fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n > 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_mod_seven() {
        let fp = PrimeField::new(7);
        // x^4 - 1 = (x-1)(x+1)(x^2+1) mod 7; x^2+1 is irreducible mod 7
        let f = fp.from_int_poly(&IntPoly::from_i64s(&[-1, 0, 0, 0, 1]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = fp.factor(&f, &mut rng);
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![6, 1]]);
        let mut degs = fp.factor_degrees(&f);
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn ext_gcd_bezout() {
        let fp = PrimeField::new(11);
        let a = vec![3, 0, 1];
        let b = vec![5, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(fp.add(&fp.mul(&s, &a), &fp.mul(&t, &b)), vec![1]);
    }

    #[test]
    fn prime_iterator() {
        let ps: Vec<u64> = primes_from(3).take(5).collect();
        assert_eq!(ps, vec![3, 5, 7, 11, 13]);
    }
}
