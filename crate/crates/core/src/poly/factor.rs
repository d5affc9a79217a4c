//! Factorization over the rationals: squarefree decomposition, modular
//! factorization at a well-chosen small prime, quadratic Hensel lifting and
//! subset recombination.

use super::modular::{primes_from, FpPoly, PrimeField};
use super::{squarefree_decomposition, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `p = unit * prod factor^multiplicity`, each factor irreducible over the
/// rationals and normalized (content 1, positive leading coefficient).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Distinct irreducible factors, ignoring multiplicities.
    pub fn irreducibles(&self) -> Vec<IntPoly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }
}

/// Factors a nonzero integer polynomial into irreducibles over the rationals.
pub fn factor_rational(p: &IntPoly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut unit = p.content();
    if p.leading_coeff().is_negative() {
        unit = -unit;
    }
    let mut factors = Vec::new();
    if p.deg() == 0 {
        return Factorization { unit, factors };
    }
    let q = p.normalized();
    let k = q.zero_root_multiplicity();
    if k > 0 {
        factors.push((IntPoly::x(), k));
    }
    let q = q.without_zero_roots();
    if q.deg() > 0 {
        for (g, mult) in squarefree_decomposition(&q) {
            for f in factor_squarefree(&g) {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| cmp_poly(a, b));
    Factorization { unit, factors }
}

fn cmp_poly(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

const PRIME_TRIALS: usize = 20;

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient.
pub(crate) fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.normalized()];
    }
    let lc = f.leading_coeff();
    // degree sets reachable as sums of modular factor degrees, intersected over primes
    let mut reachable = vec![true; n + 1];
    let mut best: Option<(PrimeField, usize)> = None;
    let mut tried = 0;
    for p in primes_from(3) {
        if tried >= PRIME_TRIALS {
            break;
        }
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = PrimeField::new(p);
        let fm = fp.from_int_poly(f);
        if fm.len() != n + 1 || !fp.is_squarefree(&fm) {
            continue;
        }
        tried += 1;
        let degs = fp.factor_degrees(&fm);
        if degs.len() == 1 {
            return vec![f.normalized()];
        }
        let sums = subset_sums(&degs, n);
        for (r, s) in reachable.iter_mut().zip(&sums) {
            *r &= *s;
        }
        if !(1..n).any(|d| reachable[d]) {
            return vec![f.normalized()];
        }
        if best.map_or(true, |(_, c)| degs.len() < c) {
            best = Some((fp, degs.len()));
        }
    }
    let (fp, _) = best.expect("some prime is good for a squarefree polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(fp.p ^ (n as u64) << 32);
    let modular = fp.factor(&fp.from_int_poly(f), &mut rng);
    let modulus = lifting_modulus(f, fp.p);
    let lifted = hensel_lift(f, &modular, fp.p, &modulus);
    recombine(f, lifted, &modulus, &reachable)
}

fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Power of `p` exceeding twice `|lc| * B`, with `B` bounding every
/// coefficient of any factor of `f` (Mignotte).
fn lifting_modulus(f: &IntPoly, p: u64) -> BigInt {
    let n = f.deg();
    let norm2_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    // ||f||_2 <= isqrt(norm2_sq) + 1
    let norm2 = num_integer::Roots::sqrt(&norm2_sq) + 1;
    let bound = (BigInt::one() << n) * norm2 * f.leading_coeff().abs() * 2;
    let mut m = BigInt::from(p);
    let pb = BigInt::from(p);
    while m <= bound {
        m *= &pb;
    }
    m
}

/// Polynomial arithmetic modulo a (prime-power) integer.
struct ModRing {
    m: BigInt,
}

type MPoly = Vec<BigInt>;

impl ModRing {
    fn red(&self, a: MPoly) -> MPoly {
        let mut v: MPoly = a.into_iter().map(|c| c.mod_floor(&self.m)).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        self.red(
            (0..n)
                .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }

    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        self.red(
            (0..n)
                .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.red(out)
    }

    /// Division by a monic polynomial.
    fn divrem_monic(&self, a: &MPoly, b: &MPoly) -> (MPoly, MPoly) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let mut r = a.clone();
        let mut q = vec![BigInt::zero(); a.len() - db];
        for i in (0..q.len()).rev() {
            let c = r[i + db].mod_floor(&self.m);
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
            q[i] = c;
        }
        r.truncate(db);
        (self.red(q), self.red(r))
    }

    fn inverse(&self, a: &BigInt) -> BigInt {
        let e = a.mod_floor(&self.m).extended_gcd(&self.m);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(&self.m)
    }

    fn scale(&self, a: &MPoly, c: &BigInt) -> MPoly {
        self.red(a.iter().map(|x| x * c).collect())
    }
}

fn lift_fp(a: &FpPoly) -> MPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = lc(f) * prod factors (mod p)` to monic factors modulo `target`.
fn hensel_lift(f: &IntPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<MPoly> {
    let top = ModRing { m: target.clone() };
    let fm = top.red(f.coeffs().to_vec());
    lift_rec(&fm, factors, p, target)
}

fn lift_rec(f: &MPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<MPoly> {
    let ring = ModRing { m: target.clone() };
    if factors.len() == 1 {
        let lc = f.last().cloned().unwrap_or_default();
        return vec![ring.scale(f, &ring.inverse(&lc))];
    }
    let fp = PrimeField::new(p);
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = fp.reduce_int(f.last().expect("nonzero"));
    let mut g0: FpPoly = vec![lc_p];
    for a in left {
        g0 = fp.mul(&g0, a);
    }
    let mut h0: FpPoly = vec![1];
    for b in right {
        h0 = fp.mul(&h0, b);
    }
    let (_, s0, t0) = fp.ext_gcd(&g0, &h0);
    let (g, h) = hensel_step_to(f, lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0), p, target);
    let mut out = lift_rec(&g, left, p, target);
    out.extend(lift_rec(&h, right, p, target));
    out
}

/// Quadratic Hensel lifting of `f = g h (mod p)` with `s g + t h = 1 (mod p)`
/// and `h` monic, until the modulus reaches `target`.
fn hensel_step_to(
    f: &MPoly,
    mut g: MPoly,
    mut h: MPoly,
    mut s: MPoly,
    mut t: MPoly,
    p: u64,
    target: &BigInt,
) -> (MPoly, MPoly) {
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        let ring = ModRing { m: m2.clone() };
        let e = ring.sub(f, &ring.mul(&g, &h));
        let (q, r) = ring.divrem_monic(&ring.mul(&s, &e), &h);
        let g_new = ring.add(&ring.add(&g, &ring.mul(&t, &e)), &ring.mul(&q, &g));
        let h_new = ring.add(&h, &r);
        let b = ring.sub(&ring.add(&ring.mul(&s, &g_new), &ring.mul(&t, &h_new)), &vec![BigInt::one()]);
        let (c, d) = ring.divrem_monic(&ring.mul(&s, &b), &h_new);
        s = ring.sub(&s, &d);
        t = ring.sub(&ring.sub(&t, &ring.mul(&t, &b)), &ring.mul(&c, &g_new));
        g = g_new;
        h = h_new;
        m = m2;
    }
    let ring = ModRing { m: target.clone() };
    (ring.red(g), ring.red(h))
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Subset search over the lifted factors. `reachable[d]` is false for degrees
/// no true factor can have (by the modular degree patterns at other primes).
fn recombine(f: &IntPoly, mut lifted: Vec<MPoly>, modulus: &BigInt, reachable: &[bool]) -> Vec<IntPoly> {
    let ring = ModRing { m: modulus.clone() };
    let mut result = Vec::new();
    let mut f_cur = f.clone();
    let mut s = 1;
    'sizes: while 2 * s <= lifted.len() {
        let r = lifted.len();
        let lc = f_cur.leading_coeff();
        let target0 = &lc * f_cur.coeff(0);
        let consts: Vec<BigInt> = lifted
            .iter()
            .map(|g| g.first().cloned().unwrap_or_default())
            .collect();
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let degree: usize = idx.iter().map(|&i| lifted[i].len() - 1).sum();
            if !reachable[degree] {
                if !next_combination(&mut idx, r) {
                    break;
                }
                continue;
            }
            // constant-term filter
            let mut c0 = lc.clone();
            for &i in &idx {
                c0 = (c0 * &consts[i]).mod_floor(modulus);
            }
            let c0 = symmetric(&c0, modulus);
            let plausible = if target0.is_zero() {
                true
            } else {
                !c0.is_zero() && (&target0 % &c0).is_zero()
            };
            if plausible {
                let mut prod: MPoly = vec![lc.mod_floor(modulus)];
                for &i in &idx {
                    prod = ring.mul(&prod, &lifted[i]);
                }
                let cand = IntPoly::new(prod.iter().map(|c| symmetric(c, modulus)).collect())
                    .primitive_part();
                if let Ok(Some(q)) = f_cur.exact_div(&cand) {
                    result.push(cand.normalized());
                    f_cur = q;
                    let mut keep = Vec::with_capacity(r - s);
                    for (i, g) in lifted.into_iter().enumerate() {
                        if !idx.contains(&i) {
                            keep.push(g);
                        }
                    }
                    lifted = keep;
                    continue 'sizes;
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        s += 1;
    }
    if f_cur.deg() > 0 {
        result.push(f_cur.normalized());
    }
    result
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn x4_minus_4_splits_into_quadratics() {
        let f = factor_rational(&p(&[-4, 0, 0, 0, 1]));
        assert_eq!(f.factors, vec![(p(&[-2, 0, 1]), 1), (p(&[2, 0, 1]), 1)]);
        assert_eq!(f.expand(), p(&[-4, 0, 0, 0, 1]));
    }

    #[test]
    fn irreducible_quadratic() {
        // no rational root: candidates +-1, +-2 all fail
        for r in [-2i64, -1, 1, 2] {
            assert_ne!(r * r - 2, 0);
        }
        let f = factor_rational(&p(&[-2, 0, 1]));
        assert!(f.is_irreducible());
    }

    #[test]
    fn monomial_with_unit() {
        let f = factor_rational(&p(&[0, 6]));
        assert_eq!(f.unit, BigInt::from(6));
        assert_eq!(f.factors, vec![(p(&[0, 1]), 1)]);
    }

    #[test]
    fn repeated_and_negative() {
        // -3 (x-1)^2 (x^2+x+1)
        let g = &(&p(&[-1, 1]).pow(2) * &p(&[1, 1, 1])).scale(&BigInt::from(-3));
        let f = factor_rational(g);
        assert_eq!(f.unit, BigInt::from(-3));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 1, 1]), 1)]);
        assert_eq!(f.expand(), *g);
    }

    #[test]
    fn swinnerton_dyer_style_irreducible() {
        // minimal polynomial of sqrt2 + sqrt3 + sqrt5, degree 8, splits into
        // many small factors modulo every prime
        let f = p(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert!(factor_rational(&f).is_irreducible());
    }

    #[test]
    fn product_of_several_irreducibles() {
        let parts = [p(&[-2, 0, 1]), p(&[1, 1, 0, 1]), p(&[-5, 0, 0, 0, 0, 1]), p(&[3, 2])];
        let mut g = IntPoly::one();
        for q in &parts {
            g = &g * q;
        }
        let f = factor_rational(&g);
        assert_eq!(f.factors.len(), 4);
        assert_eq!(f.expand(), g);
        for (q, _) in &f.factors {
            assert!(parts.iter().any(|r| r.normalized() == *q));
        }
    }

    #[test]
    fn cyclotomic_products() {
        // x^12 - 1 = product of cyclotomic polynomials for d | 12
        let f = factor_rational(&p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(f.factors.len(), 6);
        assert_eq!(f.expand(), p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            #[test]
            fn factors_reexpand(c in prop::collection::vec(-20i64..=20, 1..=7)) {
                let f = IntPoly::from_i64s(&c);
                prop_assume!(!f.is_zero());
                let fac = factor_rational(&f);
                prop_assert_eq!(fac.expand(), f);
                for (g, _) in &fac.factors {
                    prop_assert!(g.is_normalized());
                }
            }

            #[test]
            fn products_of_known_factors_are_recovered(
                a in prop::collection::vec(-9i64..=9, 2..=4),
                b in prop::collection::vec(-9i64..=9, 2..=4),
            ) {
                let fa = IntPoly::from_i64s(&a);
                let fb = IntPoly::from_i64s(&b);
                prop_assume!(fa.deg() >= 1 && fb.deg() >= 1);
                let prod = &fa * &fb;
                let fac = factor_rational(&prod);
                let total: usize = fac.factors.iter().map(|(_, m)| *m).sum();
                prop_assert!(total >= 2);
                for (g, _) in &fac.factors {
                    // every factor of the product is irreducible: refactoring is trivial
                    prop_assert!(factor_rational(g).is_irreducible());
                }
            }
        }
    }
}
