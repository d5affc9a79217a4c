use super::Expr;
use crate::algnum::{cos2pi, AlgError, AlgebraicNumber, NamedConstant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Algebraic(AlgebraicNumber),
    NotAlgebraic(NamedConstant),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Arithmetic(#[from] AlgError),
    #[error("rootof index {index} out of range: the polynomial has {count} real roots")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("{0} cannot be combined with arithmetic (no calculus over transcendental constants)")]
    MixedTranscendental(NamedConstant),
}

/// Exact value of an expression.
pub fn eval(e: &Expr) -> Result<Value, EvalError> {
    if let Expr::Const(c) = e {
        return Ok(Value::NotAlgebraic(*c));
    }
    eval_algebraic(e).map(Value::Algebraic)
}

fn eval_algebraic(e: &Expr) -> Result<AlgebraicNumber, EvalError> {
    Ok(match e {
        Expr::Rational(r) => AlgebraicNumber::from_rational(r),
        Expr::Neg(a) => eval_algebraic(a)?.neg(),
        Expr::Add(a, b) => eval_algebraic(a)?.add(&eval_algebraic(b)?),
        Expr::Sub(a, b) => eval_algebraic(a)?.sub(&eval_algebraic(b)?),
        Expr::Mul(a, b) => eval_algebraic(a)?.mul(&eval_algebraic(b)?),
        Expr::Div(a, b) => eval_algebraic(a)?.div(&eval_algebraic(b)?)?,
        Expr::Pow(a, k) => eval_algebraic(a)?.pow(*k)?,
        Expr::Sqrt(a) => eval_algebraic(a)?.sqrt()?,
        Expr::Root(k, a) => eval_algebraic(a)?.real_root(i64::from(*k))?,
        Expr::Cos2Pi(r) => cos2pi(r)?,
        Expr::RootOf(p, index) => {
            let roots = AlgebraicNumber::real_roots_of(p);
            roots
                .get(index.wrapping_sub(1))
                .cloned()
                .ok_or(EvalError::RootIndexOutOfRange { index: *index, count: roots.len() })?
        }
        Expr::Const(c) => return Err(EvalError::MixedTranscendental(*c)),
    })
}
