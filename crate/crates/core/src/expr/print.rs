use super::Expr;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;

fn rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// precedence levels: 1 sums, 2 products, 3 unary minus, 4 atoms
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn wrap(e: &Expr, parens: bool) -> String {
    if parens {
        format!("({e})")
    } else {
        e.to_string()
    }
}

/// Whether a unary-level expression prints with a leading digit.
fn starts_with_digit(e: &Expr) -> bool {
    match e {
        Expr::Rational(_) => true,
        Expr::Pow(a, _) => matches!(a.as_ref(), Expr::Rational(r) if r.denom().is_one()),
        _ => false,
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "{}", rational(r)),
            Expr::Neg(a) => write!(f, "-{}", wrap(a, level(a) < 3)),
            Expr::Add(a, b) => write!(f, "{} + {}", a, wrap(b, level(b) < 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", a, wrap(b, level(b) < 2)),
            Expr::Mul(a, b) => write!(f, "{} * {}", wrap(a, level(a) < 2), wrap(b, level(b) < 3)),
            // a digit right after '/' would be read back as a fraction literal
            Expr::Div(a, b) => write!(
                f,
                "{} / {}",
                wrap(a, level(a) < 2),
                wrap(b, level(b) < 3 || starts_with_digit(b))
            ),
            Expr::Pow(a, k) => {
                let plain = match a.as_ref() {
                    Expr::Rational(r) => r.denom().is_one(),
                    other => level(other) == 4,
                };
                write!(f, "{}^{}", wrap(a, !plain), k)
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Root(k, a) => write!(f, "root({k},{a})"),
            Expr::Cos2Pi(r) => write!(f, "cos2pi({})", rational(r)),
            Expr::RootOf(p, i) => write!(f, "rootof({p}; {i})"),
            Expr::Const(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;
    use crate::poly::IntPoly;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn examples() {
        assert_eq!(Expr::Sqrt(b(Expr::int(2))).to_string(), "sqrt(2)");
        let e = Expr::Add(b(Expr::int(1)), b(Expr::Root(3, b(Expr::int(2)))));
        assert_eq!(e.to_string(), "1 + root(3,2)");
        let e = Expr::RootOf(IntPoly::from_i64s(&[-2, 0, 0, 1]), 1);
        assert_eq!(e.to_string(), "rootof(x^3 - 2; 1)");
    }

    #[test]
    fn tricky_round_trips() {
        for src in [
            "1 / (3)",
            "1/3",
            "(1/2)^2",
            "1 - (2 - 3)",
            "-(1 + 2)",
            "--2",
            "(-2)^3",
            "(2^3)^2",
            "2 * -3",
            "2 / (3 * 4)",
            "cos2pi(-2/7) * pi",
            "sqrt(2)^-2",
            "1/2 / (3)",
            "2 * 3 / (3^2)",
            "2 / -3",
        ] {
            let e = parse(src).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{src} printed as {printed}");
        }
    }
}
