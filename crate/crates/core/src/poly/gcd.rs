use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// Greatest common divisor via the subresultant remainder sequence.
///
/// The result is primitive with positive leading coefficient; `gcd(0, 0)` is zero.
pub fn subresultant_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let (mut a, mut b) = if a.deg() >= b.deg() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        let r = a.pseudo_rem(&b).expect("b is nonzero");
        if r.is_zero() {
            return b.normalized();
        }
        if r.deg() == 0 {
            return IntPoly::one();
        }
        a = b;
        let div = &g * pow(&h, delta);
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &div).collect());
        g = a.leading_coeff();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta) / pow(&h, delta - 1)
        };
    }
}

/// Resultant `lc(p)^deg q * lc(q)^deg p * prod (alpha_i - beta_j)` via the
/// subresultant algorithm. Zero when either input is zero.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    if p.is_zero() || q.is_zero() {
        return BigInt::zero();
    }
    if p.deg() == 0 {
        return pow(&p.leading_coeff(), q.deg());
    }
    if q.deg() == 0 {
        return pow(&q.leading_coeff(), p.deg());
    }
    let ca = p.content();
    let cb = q.content();
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    let t = pow(&ca, q.deg()) * pow(&cb, p.deg());
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b).expect("b is nonzero");
        a = b;
        let div = &g * pow(&h, delta);
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &div).collect());
        g = a.leading_coeff();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta) / pow(&h, delta - 1)
        };
        if b.is_zero() {
            return BigInt::zero();
        }
        if b.deg() == 0 {
            let da = a.deg();
            let hh = pow(&b.leading_coeff(), da) / pow(&h, da - 1);
            return s * t * hh;
        }
    }
}

/// Same root set as `p` with every multiplicity 1, normalized.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    if p.deg() == 0 {
        return p.normalized();
    }
    let g = subresultant_gcd(p, &p.derivative());
    p.primitive_part()
        .exact_div(&g.primitive_part())
        .expect("gcd is nonzero")
        .expect("gcd divides p")
        .normalized()
}

/// Yun's decomposition: `p = c * prod f_i^i` with the `f_i` squarefree and
/// pairwise coprime. Returns `(f_i, i)` for nonconstant `f_i`.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let p = p.primitive_part();
    let dp = p.derivative();
    let a0 = subresultant_gcd(&p, &dp).primitive_part();
    let div = |x: &IntPoly, y: &IntPoly| -> IntPoly {
        x.exact_div(y)
            .expect("nonzero divisor")
            .expect("exact division in Yun's algorithm")
    };
    let mut b = div(&p, &a0);
    let mut c = div(&dp, &a0);
    // d = c - b'
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = subresultant_gcd(&b, &d).primitive_part();
        if a.deg() > 0 {
            out.push((a.normalized(), i));
        }
        b = div(&b, &a);
        c = div(&d, &a);
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// True when `p` has no repeated roots.
pub fn is_squarefree(p: &IntPoly) -> bool {
    p.deg() == 0 || subresultant_gcd(p, &p.derivative()).deg() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Independent oracle: Sylvester matrix determinant by fraction-free
    /// Gaussian elimination.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (m, n) = (a.deg(), b.deg());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(subresultant_gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), p(&[-1, 1]));
        let f = p(&[6, -4, 2]);
        assert_eq!(subresultant_gcd(&f, &f), p(&[3, -2, 1]));
        assert_eq!(subresultant_gcd(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), p(&[1]));
    }

    #[test]
    fn disjoint_root_sets_numerically() {
        // gcd(x^2-2, x^2-3) = 1: the roots of one do not annihilate the other
        for r in [2f64.sqrt(), -(2f64.sqrt())] {
            let v = r * r - 3.0;
            assert!(v.abs() > 0.5);
        }
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[-5, 1])), BigInt::from(-2));
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), BigInt::from(1));
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[1])), BigInt::from(1));
    }

    #[test]
    fn resultant_agrees_with_sylvester_determinant() {
        let cases = [
            (p(&[1, -3, 0, 2]), p(&[5, 1, 4])),
            (p(&[-7, 0, 0, 0, 3]), p(&[2, -1, 0, 6, 1])),
            (p(&[0, 1, 2]), p(&[4, 0, -2, 0, 0, 9])),
            (p(&[12, 8, -6]), p(&[3, 3])),
            (p(&[1, 2, 1]), p(&[1, 1])),
        ];
        for (a, b) in cases {
            assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b), "{a} / {b}");
            assert_eq!(resultant(&b, &a), sylvester_resultant(&b, &a), "{b} / {a}");
        }
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[1, -2, 1])), p(&[-1, 1]));
        assert_eq!(squarefree_part(&p(&[-2, 0, 1])), p(&[-2, 0, 1]));
        assert_eq!(squarefree_part(&p(&[0, 0, 1, 1])), p(&[0, 1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[1, 0, 1]);
        let d = squarefree_decomposition(&f);
        assert_eq!(
            d,
            vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]
        );
    }

    pub(crate) mod props {
        use super::*;
        use proptest::prelude::*;

        pub fn small_poly() -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-20i64..=20, 1..=7).prop_map(|c| IntPoly::from_i64s(&c))
        }

        proptest! {
            #[test]
            fn resultant_zero_iff_common_factor(a in small_poly(), b in small_poly()) {
                prop_assume!(!a.is_zero() && !b.is_zero());
                let g = subresultant_gcd(&a, &b);
                prop_assert_eq!(resultant(&a, &b).is_zero(), g.deg() > 0);
            }

            #[test]
            fn gcd_divides_both(a in small_poly(), b in small_poly()) {
                prop_assume!(!a.is_zero() || !b.is_zero());
                let g = subresultant_gcd(&a, &b);
                prop_assert!(a.pseudo_rem(&g).unwrap().is_zero());
                prop_assert!(b.pseudo_rem(&g).unwrap().is_zero());
            }

            #[test]
            fn resultant_matches_sylvester(a in small_poly(), b in small_poly()) {
                prop_assume!(!a.is_zero() && !b.is_zero());
                prop_assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b));
            }

            #[test]
            fn common_root_forces_zero_resultant(a in small_poly(), b in small_poly(), r in -5i64..=5) {
                prop_assume!(!a.is_zero() && !b.is_zero());
                let lin = IntPoly::from_i64s(&[-r, 1]);
                prop_assert!(resultant(&(&a * &lin), &(&b * &lin)).is_zero());
            }
        }
    }

    #[test]
    fn content_and_sign_handling() {
        let r = resultant(&p(&[2, 2]), &p(&[-3, 3]));
        assert_eq!(r, sylvester_resultant(&p(&[2, 2]), &p(&[-3, 3])));
        assert!(r.is_negative() || r.is_positive());
    }
}
