//! Expression language for numbers: syntax tree, parser, printer, evaluator.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ("^" int)?
//! atom   := rational | "(" expr ")" | "sqrt(" expr ")" | "root(" int "," expr ")"
//!         | "cos2pi(" rational ")" | "rootof(" poly ";" int ")"
//!         | "pi" | "e" | "ln2" | "sin1" | "omega"
//! ```

mod eval;
mod parse;
mod print;

pub use eval::{eval, EvalError, Value};
pub use parse::{parse, ParseError};

use crate::algnum::NamedConstant;
use crate::poly::IntPoly;
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Non-negative literal `p` or `p/q`; negation is a separate node.
    Rational(BigRational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
    /// Real `k`-th root, `k >= 2`.
    Root(u32, Box<Expr>),
    /// `cos(2 pi r)`.
    Cos2Pi(BigRational),
    /// The `index`-th real root (from 1, ascending) of a polynomial.
    RootOf(IntPoly, usize),
    Const(NamedConstant),
}

/// Coarse node categories, used by the compilers to check fragments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Rational,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sqrt,
    Root(u32),
    Cos2Pi,
    RootOf,
    Const,
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        if v < 0 {
            return Expr::Neg(Box::new(Expr::int(-v)));
        }
        Expr::Rational(BigRational::from_integer(v.into()))
    }

    pub fn kind(&self) -> NodeKind {
        match self {
            Expr::Rational(_) => NodeKind::Rational,
            Expr::Neg(_) => NodeKind::Neg,
            Expr::Add(..) => NodeKind::Add,
            Expr::Sub(..) => NodeKind::Sub,
            Expr::Mul(..) => NodeKind::Mul,
            Expr::Div(..) => NodeKind::Div,
            Expr::Pow(..) => NodeKind::Pow,
            Expr::Sqrt(_) => NodeKind::Sqrt,
            Expr::Root(k, _) => NodeKind::Root(*k),
            Expr::Cos2Pi(_) => NodeKind::Cos2Pi,
            Expr::RootOf(..) => NodeKind::RootOf,
            Expr::Const(_) => NodeKind::Const,
        }
    }

    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) | Expr::Root(_, a) => vec![a],
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => vec![a, b],
            Expr::Rational(_) | Expr::Cos2Pi(_) | Expr::RootOf(..) | Expr::Const(_) => vec![],
        }
    }

    /// First node (pre-order) whose kind fails `allowed`.
    pub fn find_kind(&self, allowed: &dyn Fn(NodeKind) -> bool) -> Option<NodeKind> {
        if !allowed(self.kind()) {
            return Some(self.kind());
        }
        self.children().into_iter().find_map(|c| c.find_kind(allowed))
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
