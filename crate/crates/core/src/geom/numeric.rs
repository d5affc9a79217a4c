//! Certified real roots of polynomials whose coefficients are only known to
//! lie in dyadic intervals.

use crate::poly::{isolate_real_roots, refine_isolating, squarefree_part, Dyadic, DyadicInterval, IntPoly};
use num_bigint::BigInt;
use std::cmp::Ordering;

pub(crate) type I = DyadicInterval;

/// Why a root set could not be certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RootFail {
    /// More precision might help.
    Unresolved,
    /// The polynomial is exactly zero.
    Vanishes,
}

pub(crate) fn is_exact_zero(v: &I) -> bool {
    v.lo.is_zero() && v.hi.is_zero()
}

pub(crate) fn pt(v: Dyadic) -> I {
    DyadicInterval::point(v)
}

pub(crate) fn int(v: i64) -> I {
    pt(Dyadic::from_int(v))
}

/// Interval polynomials in ascending coefficient order.
pub(crate) mod ipoly {
    use super::I;

    pub fn add(a: &[I], b: &[I]) -> Vec<I> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => x.add(y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect()
    }

    pub fn neg(a: &[I]) -> Vec<I> {
        a.iter().map(I::neg).collect()
    }

    pub fn sub(a: &[I], b: &[I]) -> Vec<I> {
        add(a, &neg(b))
    }

    pub fn mul(a: &[I], b: &[I], prec: i64) -> Vec<I> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![super::int(0); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y).round_out(prec));
            }
        }
        out
    }

    pub fn scale(a: &[I], c: &I, prec: i64) -> Vec<I> {
        a.iter().map(|x| x.mul(c).round_out(prec)).collect()
    }
}

fn horner(coeffs: &[I], x: &I, prec: i64) -> I {
    let mut acc = int(0);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).round_out(prec).add(c);
    }
    acc
}

fn derivative(coeffs: &[I]) -> Vec<I> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&int(i as i64)))
        .collect()
}

/// Integer polynomial proportional to the coefficient midpoints.
fn midpoint_poly(coeffs: &[I]) -> IntPoly {
    let mids: Vec<Dyadic> = coeffs.iter().map(DyadicInterval::midpoint).collect();
    let e = mids.iter().filter(|m| !m.is_zero()).map(Dyadic::exponent).min().unwrap_or(0);
    IntPoly::new(
        mids.iter()
            .map(|m| {
                if m.is_zero() {
                    BigInt::from(0)
                } else {
                    m.mantissa() << (m.exponent() - e) as usize
                }
            })
            .collect(),
    )
}

fn sign(v: &I) -> Option<Ordering> {
    v.strict_sign()
}

/// Whether `p` has no root in `[lo, hi]`, by bisection with a mean-value
/// enclosure.
fn excludes(p: &[I], dp: &[I], lo: Dyadic, hi: Dyadic, prec: i64) -> bool {
    let max_depth = prec + 64;
    let mut stack = vec![(lo, hi, 0i64)];
    while let Some((a, b, depth)) = stack.pop() {
        let m = a.midpoint(&b);
        let x = DyadicInterval::new(a.clone(), b.clone());
        let slope = horner(dp, &x, prec);
        let radius = DyadicInterval::new(&a - &m, &b - &m);
        let enclosure = horner(p, &pt(m.clone()), prec).add(&slope.mul(&radius).round_out(prec));
        if sign(&enclosure).is_some() {
            continue;
        }
        if depth >= max_depth {
            return false;
        }
        stack.push((a, m.clone(), depth + 1));
        stack.push((m, b, depth + 1));
    }
    true
}

/// Disjoint ascending intervals, each holding exactly one real root of every
/// polynomial with coefficients in the given boxes; together they hold all
/// real roots.
pub(crate) fn certified_roots(coeffs: &[I], prec: i64) -> Result<Vec<I>, RootFail> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(is_exact_zero) {
        c.pop();
    }
    let Some(lead) = c.last() else {
        return Err(RootFail::Vanishes);
    };
    if lead.contains_zero() {
        return Err(RootFail::Unresolved);
    }
    if c.len() == 1 {
        return Ok(Vec::new());
    }
    let mid = squarefree_part(&midpoint_poly(&c));
    let delta = Dyadic::pow2(-(prec * 3 / 4));
    let width = Dyadic::pow2(-prec);
    let mut brackets: Vec<I> = Vec::new();
    for iv in isolate_real_roots(&mid) {
        let r = refine_isolating(&mid, &iv, &width);
        let b = DyadicInterval::new(&r.lo - &delta, &r.hi + &delta);
        if brackets.last().is_some_and(|prev| !prev.is_disjoint_from(&b)) {
            return Err(RootFail::Unresolved);
        }
        let s_lo = sign(&horner(&c, &pt(b.lo.clone()), prec));
        let s_hi = sign(&horner(&c, &pt(b.hi.clone()), prec));
        match (s_lo, s_hi) {
            (Some(x), Some(y)) if x != y => brackets.push(b),
            _ => return Err(RootFail::Unresolved),
        }
    }
    // Cauchy bound: every root lies strictly inside (-bound, bound)
    let lead_min = lead.lo.abs().min(lead.hi.abs());
    let top = c[..c.len() - 1].iter().map(DyadicInterval::max_abs).max().unwrap_or_else(Dyadic::zero);
    let bound = &Dyadic::from_int(1) + &top.div_round(&lead_min, 8, true);
    let dp = derivative(&c);
    let mut edges = vec![-&bound];
    for b in &brackets {
        edges.push(b.lo.clone());
        edges.push(b.hi.clone());
    }
    edges.push(bound);
    for gap in edges.chunks(2) {
        if gap[0] < gap[1] && !excludes(&c, &dp, gap[0].clone(), gap[1].clone(), prec) {
            return Err(RootFail::Unresolved);
        }
    }
    Ok(brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ints(v: &[i64]) -> Vec<I> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn exact_cubic() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let roots = certified_roots(&ints(&[6, -7, 0, 1]), 64).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, want) in roots.iter().zip([-3, 1, 2]) {
            assert!(r.contains(&Dyadic::from_int(want)));
        }
    }

    #[test]
    fn fuzzy_coefficients() {
        // x^2 - 2 with the constant only known to 2^-80
        let c = DyadicInterval::from_rational(&BigRational::new((-2).into(), 1.into()), 80);
        let fuzzy = DyadicInterval::new(&c.lo - &Dyadic::pow2(-80), &c.hi + &Dyadic::pow2(-80));
        let roots = certified_roots(&[fuzzy, int(0), int(1)], 80).unwrap();
        assert_eq!(roots.len(), 2);
        let two = Dyadic::from_int(2);
        assert!(&roots[1].lo * &roots[1].lo < two && &roots[1].hi * &roots[1].hi > two);
        assert!(roots[1].width() < Dyadic::pow2(-50));
    }

    #[test]
    fn no_real_roots_and_failures() {
        assert!(certified_roots(&ints(&[1, 0, 1]), 64).unwrap().is_empty());
        assert_eq!(certified_roots(&ints(&[0, 0]), 64), Err(RootFail::Vanishes));
        // a double root cannot be certified as a sign change
        assert_eq!(certified_roots(&ints(&[1, -2, 1]), 64), Err(RootFail::Unresolved));
        let wobbly = DyadicInterval::new(-Dyadic::pow2(-70), Dyadic::pow2(-70));
        assert_eq!(certified_roots(&[int(1), wobbly], 64), Err(RootFail::Unresolved));
    }
}
