use super::{resultant, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Interpolation nodes 0, 1, -1, 2, -2, ... (small magnitudes keep values short).
fn nodes(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|i| {
            let k = ((i + 1) / 2) as i64;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect()
}

/// Unique polynomial of degree `< xs.len()` through the given points, or
/// `None` if its coefficients are not all integers.
pub fn interpolate_integer(xs: &[BigInt], ys: &[BigInt]) -> Option<IntPoly> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // Newton divided differences
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // expand the Newton form
    let mut acc: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, a) in acc.iter().enumerate() {
            next[j + 1] += a;
            next[j] -= a * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &dd[i];
        acc = next;
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.denom().is_one() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(IntPoly::new(coeffs))
}

/// Computes `R(x) = Res_y(A_x(y), B_x(y))` for a pair of polynomials in `y`
/// depending polynomially on `x`, by evaluating at `degree_bound + 1` integer
/// nodes and interpolating. `pair_at(x0)` must return `(A_{x0}, B_{x0})`, and
/// `degree_bound` must bound `deg_x R`.
pub fn resultant_in_x<F>(degree_bound: usize, mut pair_at: F) -> IntPoly
where
    F: FnMut(&BigInt) -> (IntPoly, IntPoly),
{
    let xs = nodes(degree_bound + 1);
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|x0| {
            let (a, b) = pair_at(x0);
            resultant(&a, &b)
        })
        .collect();
    interpolate_integer(&xs, &ys).expect("resultant of integer polynomials has integer coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = IntPoly::from_i64s(&[7, -3, 0, 2, 5]);
        let xs = nodes(5);
        let ys: Vec<BigInt> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate_integer(&xs, &ys), Some(f));
    }

    #[test]
    fn non_integer_interpolant_rejected() {
        // through (0,0), (1,1), (-1,0): x^2/2 + x/2
        let xs = nodes(3);
        let ys = vec![BigInt::zero(), BigInt::one(), BigInt::zero()];
        assert_eq!(interpolate_integer(&xs, &ys), None);
    }

    #[test]
    fn sum_composition_of_square_roots() {
        // Res_y(y^2 - 2, (x - y)^2 - 3) = x^4 - 10x^2 + 1
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let q = IntPoly::from_i64s(&[-3, 0, 1]);
        let r = resultant_in_x(4, |x0| {
            let shifted = q.compose(&IntPoly::new(vec![x0.clone(), BigInt::from(-1)]));
            (p.clone(), shifted)
        });
        assert_eq!(r, IntPoly::from_i64s(&[1, 0, -10, 0, 1]));
    }
}
