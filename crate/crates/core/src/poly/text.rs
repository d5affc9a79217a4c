//! Text syntax for integer polynomials in `x`: `8x^3 - 6x + 1`.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial syntax error at offset {offset}: expected {expected}")]
pub struct PolyParseError {
    pub offset: usize,
    pub expected: &'static str,
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = PolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, end) = parse_poly_prefix(s, 0)?;
        let rest = skip_ws(s.as_bytes(), end);
        if rest != s.len() {
            return Err(PolyParseError {
                offset: rest,
                expected: "'+', '-' or end of input",
            });
        }
        Ok(p)
    }
}

fn skip_ws(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

fn read_uint(b: &[u8], i: usize) -> Option<(BigInt, usize)> {
    let mut j = i;
    while j < b.len() && b[j].is_ascii_digit() {
        j += 1;
    }
    if j == i {
        return None;
    }
    let v = std::str::from_utf8(&b[i..j]).ok()?.parse().ok()?;
    Some((v, j))
}

/// Parses a polynomial starting at byte `start`, stopping before the first
/// character that cannot continue it. Returns the polynomial and the offset
/// just past the last consumed character.
pub(crate) fn parse_poly_prefix(s: &str, start: usize) -> Result<(IntPoly, usize), PolyParseError> {
    let b = s.as_bytes();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = skip_ws(b, start);
    let mut first = true;
    loop {
        let mut negative = false;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            negative = b[i] == b'-';
            i = skip_ws(b, i + 1);
        } else if !first {
            break;
        }
        let mut coeff = None;
        if let Some((v, j)) = read_uint(b, i) {
            coeff = Some(v);
            i = skip_ws(b, j);
            if i < b.len() && b[i] == b'*' {
                i = skip_ws(b, i + 1);
                if i >= b.len() || b[i] != b'x' {
                    return Err(PolyParseError {
                        offset: i,
                        expected: "'x'",
                    });
                }
            }
        }
        let mut exp = 0usize;
        if i < b.len() && b[i] == b'x' {
            exp = 1;
            i = skip_ws(b, i + 1);
            if i < b.len() && b[i] == b'^' {
                i = skip_ws(b, i + 1);
                let (e, j) = read_uint(b, i).ok_or(PolyParseError {
                    offset: i,
                    expected: "exponent",
                })?;
                exp = e.try_into().map_err(|_| PolyParseError {
                    offset: i,
                    expected: "small exponent",
                })?;
                i = skip_ws(b, j);
            }
        } else if coeff.is_none() {
            return Err(PolyParseError {
                offset: i,
                expected: "coefficient or 'x'",
            });
        }
        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += c;
        first = false;
    }
    // report the end of consumed input without trailing whitespace
    let mut end = i;
    while end > start && b[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    Ok((IntPoly::new(coeffs), end))
}
