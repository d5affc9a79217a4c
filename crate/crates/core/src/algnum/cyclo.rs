//! Cosines of rational multiples of a full turn.

use super::{AlgError, AlgebraicNumber};
use crate::poly::{factor_rational, isolate_real_roots, resultant_in_x, squarefree_part, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Largest denominator accepted by [`cos2pi`].
pub const MAX_COS_DENOMINATOR: u64 = 4096;

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut p = IntPoly::new({
        let mut c = vec![BigInt::zero(); n as usize + 1];
        c[0] = BigInt::from(-1);
        c[n as usize] = BigInt::one();
        c
    });
    for d in 1..n {
        if n % d == 0 {
            p = p
                .exact_div(&cyclotomic(d))
                .ok()
                .flatten()
                .expect("cyclotomic factors divide x^n - 1");
        }
    }
    p
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&j| j.gcd(&n) == 1).count() as u64
}

/// `cos(2 pi r)` as an exact algebraic number.
pub fn cos2pi(r: &BigRational) -> Result<AlgebraicNumber, AlgError> {
    let q = r
        .denom()
        .to_u64()
        .filter(|&q| q <= MAX_COS_DENOMINATOR)
        .ok_or_else(|| AlgError::DenominatorTooLarge(r.denom().clone()))?;
    let k = r
        .numer()
        .mod_floor(&BigInt::from(q))
        .to_u64()
        .unwrap_or_default();
    // cos(2 pi k/q) = cos(2 pi k'/q) with k' in [0, q/2]
    let k = k.min(q - k);
    match q {
        1 => return Ok(AlgebraicNumber::one()),
        2 => return Ok(AlgebraicNumber::from_int(-1)),
        _ => {}
    }
    // eliminate z from phi_q(z) and z^2 - x z + 1: the result is the square of
    // the minimal polynomial of 2 cos(2 pi / q)
    let phi = cyclotomic(q);
    let elim = resultant_in_x(totient(q) as usize, |x0| {
        let quad = IntPoly::new(vec![BigInt::one(), -x0.clone(), BigInt::one()]);
        (phi.clone(), quad)
    });
    let psi = squarefree_part(&elim);
    // x -> 2x turns the 2cos polynomial into the cos polynomial
    let two = BigInt::from(2);
    let minpoly = psi.affine_substitute(&two, &BigInt::zero(), &BigInt::one()).normalized();
    let fac = factor_rational(&minpoly);
    debug_assert!(fac.is_irreducible());
    let minpoly = fac.irreducibles().swap_remove(0);
    // real roots are cos(2 pi j/q) for j coprime to q in [1, q/2), which
    // decrease as j grows; isolation lists them in ascending order
    let roots = isolate_real_roots(&minpoly);
    let index = (k + 1..q.div_ceil(2)).filter(|j| j.gcd(&q) == 1).count();
    debug_assert_eq!(roots.len() as u64, totient(q) / 2);
    Ok(AlgebraicNumber::from_parts(minpoly, roots[index].clone()))
}
