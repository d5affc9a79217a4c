//! Fixed-point decimal evaluation used as an independent check on exact
//! arithmetic. Values are integers scaled by `10^DIGITS`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use towerforge::expr::Expr;

pub const DIGITS: u32 = 600;

/// Arguments this close to zero (in units of `10^-DIGITS`) count as zero
/// when taking roots.
const SLACK: i64 = 1_000_000;

/// Denominators smaller than `10^-MIN_DIVISOR` are refused: the quotient
/// would no longer be accurate to 100 digits.
const MIN_DIVISOR: u32 = 150;

fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

fn from_rational(r: &BigRational) -> BigInt {
    (r.numer() * scale()).div_floor(r.denom())
}

fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b).div_floor(&scale())
}

fn div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.abs() < BigInt::from(10).pow(DIGITS - MIN_DIVISOR) {
        return None;
    }
    Some((a * scale()).div_floor(b))
}

fn root(a: &BigInt, k: u32) -> Option<BigInt> {
    if a.abs() <= BigInt::from(SLACK) {
        return Some(BigInt::zero());
    }
    if a.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return root(&-a, k).map(|v| -v);
    }
    Some((a * scale().pow(k - 1)).nth_root(k))
}

fn atan_inv(n: u64) -> BigInt {
    // atan(1/n) = sum (-1)^j / ((2j+1) n^(2j+1))
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut power = scale() / &n;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        j += 1;
    }
    sum
}

fn pi() -> BigInt {
    atan_inv(5) * 16 - atan_inv(239) * 4
}

fn cos2pi(r: &BigRational) -> BigInt {
    let mut t = r - r.floor();
    if t > BigRational::new(1.into(), 2.into()) {
        t -= BigRational::one();
    }
    let x = (pi() * 2 * t.numer()) / t.denom();
    let x2 = mul(&x, &x);
    let mut term = scale();
    let mut sum = scale();
    let mut n = 0u64;
    loop {
        term = -mul(&term, &x2) / BigInt::from((n + 1) * (n + 2));
        if term.is_zero() {
            return sum;
        }
        sum += &term;
        n += 2;
    }
}

/// Value scaled by `10^DIGITS`, or `None` where the tree is undefined or
/// too ill-conditioned for the fixed-point check.
pub fn eval(e: &Expr) -> Option<BigInt> {
    Some(match e {
        Expr::Rational(r) => from_rational(r),
        Expr::Neg(a) => -eval(a)?,
        Expr::Add(a, b) => eval(a)? + eval(b)?,
        Expr::Sub(a, b) => eval(a)? - eval(b)?,
        Expr::Mul(a, b) => mul(&eval(a)?, &eval(b)?),
        Expr::Div(a, b) => div(&eval(a)?, &eval(b)?)?,
        Expr::Pow(a, k) => {
            let base = eval(a)?;
            let mut acc = scale();
            for _ in 0..k.unsigned_abs() {
                acc = mul(&acc, &base);
            }
            if *k < 0 {
                div(&scale(), &acc)?
            } else {
                acc
            }
        }
        Expr::Sqrt(a) => root(&eval(a)?, 2)?,
        Expr::Root(k, a) => root(&eval(a)?, *k)?,
        Expr::Cos2Pi(r) => cos2pi(r),
        Expr::RootOf(..) | Expr::Const(_) => return None,
    })
}

/// `true` when the decimal string (`digits` places) is within one unit in
/// its last place of the scaled oracle value.
pub fn within_one_ulp(rendered: &str, digits: u32, oracle: &BigInt) -> bool {
    let (neg, body) = match rendered.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, rendered),
    };
    let (int_part, frac) = body.split_once('.').unwrap_or((body, ""));
    assert_eq!(frac.len(), digits as usize, "rendering of {rendered}");
    let mut r: BigInt = format!("{int_part}{frac}").parse().expect("decimal digits");
    if neg {
        r = -r;
    }
    let ulp = BigInt::from(10).pow(DIGITS - digits);
    (r * &ulp - oracle).abs() <= ulp
}
