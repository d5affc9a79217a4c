use super::{Dyadic, DyadicInterval, IntPoly};
use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;

/// Signed remainder sequence `p, p', -rem(p, p'), ...` over the integers.
///
/// Pseudo-remainders are sign-corrected and reduced to primitive parts, which
/// scales each entry by a positive constant and so leaves sign counts intact.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.deg() == 0 {
            return SturmSequence { seq };
        }
        seq.push(p.derivative().primitive_part());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let d = a.pseudo_divrem(b).expect("nonzero");
            let mut r = d.remainder;
            if b.leading_coeff().is_negative() && d.scale_power % 2 == 1 {
                r = -r;
            }
            if r.is_zero() {
                break;
            }
            seq.push((-r).primitive_part());
        }
        SturmSequence { seq }
    }

    fn sign_variations(&self, x: &Dyadic) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for q in &self.seq {
            let s = q.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Dyadic, b: &Dyadic) -> usize {
        if a >= b {
            return 0;
        }
        self.sign_variations(a)
            .saturating_sub(self.sign_variations(b))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }
}

/// Distinct real roots of `p` in `(a, b]`. `p` must be nonzero.
pub fn sturm_count(p: &IntPoly, a: &Dyadic, b: &Dyadic) -> usize {
    let sq = super::squarefree_part(p);
    SturmSequence::new(&sq).count(a, b)
}

/// `k` such that every root of `p` has absolute value strictly below `2^k`,
/// from the Cauchy bound `1 + max|a_i| / |a_n|`.
pub fn cauchy_bound_log2(p: &IntPoly) -> i64 {
    let lc = p.leading_coeff().abs();
    let max = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // ceil(max / lc) + 1 < 2^k
    let q = (&max + &lc - BigInt::from(1)) / &lc + 1;
    let mut k = 0i64;
    while (BigInt::from(1) << k as usize) <= q {
        k += 1;
    }
    k
}

/// Pairwise-disjoint isolating intervals for the real roots of a squarefree
/// polynomial, in ascending order. Each interval `[lo, hi]` contains exactly
/// one root in its interior and neither endpoint is a root.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<DyadicInterval> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(p);
    let k = cauchy_bound_log2(p);
    let lo = -Dyadic::pow2(k);
    let hi = Dyadic::pow2(k);
    let mut out = Vec::new();
    let total = sturm.count(&lo, &hi);
    bisect(&sturm, lo, hi, total, &mut out);
    out
}

fn bisect(
    sturm: &SturmSequence,
    lo: Dyadic,
    hi: Dyadic,
    count: usize,
    out: &mut Vec<DyadicInterval>,
) {
    match count {
        0 => {}
        1 => out.push(DyadicInterval::new(lo, hi)),
        _ => {
            let m = split_point(sturm.poly(), &lo, &hi);
            let left = sturm.count(&lo, &m);
            bisect(sturm, lo, m.clone(), left, out);
            bisect(sturm, m, hi, count - left, out);
        }
    }
}

/// A dyadic point strictly inside `(lo, hi)`, near the middle, that is not a
/// root of `p`.
pub(crate) fn split_point(p: &IntPoly, lo: &Dyadic, hi: &Dyadic) -> Dyadic {
    let w = hi - lo;
    let mid = lo.midpoint(hi);
    if p.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    // at most deg(p) roots, so one of these offsets works
    let mut step = w.half().half();
    loop {
        for cand in [&mid + &step, &mid - &step] {
            if p.sign_at(&cand) != Ordering::Equal {
                return cand;
            }
        }
        step = step.half();
        debug_assert!(!step.is_zero());
    }
}

/// Shrinks an isolating interval of a root of squarefree `p` by bisection
/// until its width is at most `width`.
pub(crate) fn refine_isolating(p: &IntPoly, iv: &DyadicInterval, width: &Dyadic) -> DyadicInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = p.sign_at(&lo);
    debug_assert!(s_lo != Ordering::Equal);
    while &(&hi - &lo) > width {
        let m = split_point(p, &lo, &hi);
        if p.sign_at(&m) == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    DyadicInterval::new(lo, hi)
}
