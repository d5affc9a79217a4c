use super::AlgebraicNumber;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

/// `round(r)` with ties going to the even neighbour.
fn round_half_even(r: &BigRational) -> BigInt {
    let fl = r.floor().to_integer();
    let frac = r - BigRational::from_integer(fl.clone());
    let half = BigRational::new(1.into(), 2.into());
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => fl,
        std::cmp::Ordering::Greater => fl + 1,
        std::cmp::Ordering::Equal => {
            if fl.is_even() {
                fl
            } else {
                fl + 1
            }
        }
    }
}

fn format_scaled(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac_part) = s.split_at(s.len() - digits);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(int_part);
    if digits > 0 {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

pub(super) fn render(a: &AlgebraicNumber, digits: usize) -> String {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
    if let Some(r) = a.to_rational() {
        return format_scaled(&round_half_even(&(r * &scale)), digits);
    }
    // 10^d < 2^(4d); a few guard bits beyond that settle most cases at once
    let mut prec = 4 * digits as i64 + 8;
    let mut x = a.clone();
    loop {
        x = x.refined(prec);
        let lo = round_half_even(&(x.isol.lo.to_rational() * &scale));
        let hi = round_half_even(&(x.isol.hi.to_rational() * &scale));
        if lo == hi {
            return format_scaled(&lo, digits);
        }
        prec += prec / 2 + 8;
    }
}
