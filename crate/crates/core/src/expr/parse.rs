use super::Expr;
use crate::algnum::NamedConstant;
use crate::poly::parse_poly_prefix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, b: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.b.len() {
        return Err(p.err("operator or end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    b: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, expected: &str) -> ParseError {
        ParseError { offset: self.pos, expected: expected.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.b.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("'{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let start = self.pos_after_ws();
            let v = self.uint("integer exponent")?;
            let v = if neg { -v } else { v };
            let e = v.to_i64().ok_or(ParseError {
                offset: start,
                expected: "exponent fitting in 64 bits".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn pos_after_ws(&mut self) -> usize {
        self.ws();
        self.pos
    }

    fn uint(&mut self, what: &str) -> Result<BigInt, ParseError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(what));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    /// `int ("/" int)?`; the slash is only taken when a digit follows it.
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let num = self.uint("number")?;
        let save = self.pos;
        if self.eat(b'/') && self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let den_at = self.pos;
            let den = self.uint("denominator")?;
            if den.is_zero() {
                return Err(ParseError { offset: den_at, expected: "nonzero denominator".into() });
            }
            return Ok(BigRational::new(num, den));
        }
        self.pos = save;
        Ok(BigRational::from_integer(num))
    }

    fn word(&mut self) -> &str {
        self.ws();
        let start = self.pos;
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Rational(self.rational()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let w = self.word().to_string();
                if let Some(c) = NamedConstant::from_keyword(&w) {
                    return Ok(Expr::Const(c));
                }
                let is_fn = matches!(w.as_str(), "sqrt" | "root" | "cos2pi" | "rootof");
                if !is_fn {
                    self.pos = start;
                    return Err(self.err("expression"));
                }
                self.expect(b'(')?;
                let e = match w.as_str() {
                    "sqrt" => Expr::Sqrt(Box::new(self.expr()?)),
                    "root" => {
                        let at = self.pos_after_ws();
                        let k = self.uint("root degree")?;
                        let k = k.to_u32().filter(|&k| k >= 2).ok_or(ParseError {
                            offset: at,
                            expected: "root degree of at least 2".into(),
                        })?;
                        self.expect(b',')?;
                        Expr::Root(k, Box::new(self.expr()?))
                    }
                    "cos2pi" => {
                        let neg = self.eat(b'-');
                        let r = self.rational()?;
                        Expr::Cos2Pi(if neg { -r } else { r })
                    }
                    _ => {
                        let at = self.pos_after_ws();
                        let (poly, end) = parse_poly_prefix(self.src, at).map_err(|e| ParseError {
                            offset: e.offset,
                            expected: e.expected.to_string(),
                        })?;
                        if poly.deg() == 0 {
                            return Err(ParseError {
                                offset: at,
                                expected: "non-constant polynomial".into(),
                            });
                        }
                        self.pos = end;
                        self.expect(b';')?;
                        let at = self.pos_after_ws();
                        let idx = self.uint("root index")?;
                        let idx = idx.to_usize().filter(|&i| i >= 1).ok_or(ParseError {
                            offset: at,
                            expected: "root index of at least 1".into(),
                        })?;
                        Expr::RootOf(poly, idx)
                    }
                };
                self.expect(b')')?;
                Ok(e)
            }
            _ => Err(self.err("expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn functions() {
        assert_eq!(parse("sqrt(2)").unwrap(), Expr::Sqrt(b(Expr::int(2))));
        assert_eq!(parse("root(3,2)").unwrap(), Expr::Root(3, b(Expr::int(2))));
        assert_eq!(parse("cos2pi(-1/9)").unwrap(), Expr::Cos2Pi(q(-1, 9)));
        assert_eq!(
            parse("rootof(x^3 - 2; 1)").unwrap(),
            Expr::RootOf(IntPoly::from_i64s(&[-2, 0, 0, 1]), 1)
        );
        assert_eq!(parse(" pi ").unwrap(), Expr::Const(NamedConstant::Pi));
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("1 - 2 - 3 * 4 ^ 2").unwrap();
        let expect = Expr::Sub(
            b(Expr::Sub(b(Expr::int(1)), b(Expr::int(2)))),
            b(Expr::Mul(b(Expr::int(3)), b(Expr::Pow(b(Expr::int(4)), 2)))),
        );
        assert_eq!(e, expect);
        assert_eq!(parse("-2^2").unwrap(), Expr::Neg(b(Expr::Pow(b(Expr::int(2)), 2))));
        assert_eq!(parse("2^-1").unwrap(), Expr::Pow(b(Expr::int(2)), -1));
    }

    #[test]
    fn rational_literals_versus_division() {
        assert_eq!(parse("1/3").unwrap(), Expr::Rational(q(1, 3)));
        assert_eq!(parse("1 / 3").unwrap(), Expr::Rational(q(1, 3)));
        assert_eq!(
            parse("1/(3)").unwrap(),
            Expr::Div(b(Expr::int(1)), b(Expr::int(3)))
        );
        assert_eq!(
            parse("6/2/3").unwrap(),
            Expr::Div(b(Expr::int(3)), b(Expr::int(3)))
        );
        assert_eq!(
            parse("sqrt(2)/2").unwrap(),
            Expr::Div(b(Expr::Sqrt(b(Expr::int(2)))), b(Expr::int(2)))
        );
    }

    #[test]
    fn errors_report_offsets() {
        let e = parse("sqrt(").unwrap_err();
        assert_eq!(e.offset, 5);
        assert_eq!(e.expected, "expression");
        assert_eq!(parse("root(1,2)").unwrap_err().offset, 5);
        assert_eq!(parse("1 +").unwrap_err().offset, 3);
        assert_eq!(parse("2 2").unwrap_err().offset, 2);
        assert_eq!(parse("foo(2)").unwrap_err().offset, 0);
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("rootof(x^2 - 2; 0)").unwrap_err().offset, 16);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }
}
