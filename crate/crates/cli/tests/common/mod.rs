//! Random expression trees shared by the test targets.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use towerforge::algnum::NamedConstant;
use towerforge::expr::Expr;
use towerforge::poly::IntPoly;

pub mod oracle;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

pub fn small_rational(r: &mut ChaCha8Rng) -> Expr {
    let num: i64 = r.gen_range(0..=9);
    let den: i64 = if r.gen_bool(0.6) { 1 } else { r.gen_range(2..=5) };
    Expr::Rational(BigRational::new(num.into(), den.into()))
}

/// Node sets for the generators.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Nodes {
    /// Rationals, field operations, integer powers and square roots.
    RulerCompass,
    /// Adds real roots, cosines of rational turns and named constants.
    Numeric,
    /// Everything the grammar has, including `rootof`.
    All,
}

/// A tree of depth at most `depth`.
pub fn tree(r: &mut ChaCha8Rng, depth: usize, nodes: Nodes) -> Expr {
    if depth <= 1 || r.gen_bool(0.3) {
        return leaf(r, nodes);
    }
    let d = depth - 1;
    let unary = match nodes {
        Nodes::RulerCompass => 3,
        _ => 4,
    };
    match r.gen_range(0..5 + unary) {
        0 => Expr::Add(b(tree(r, d, nodes)), b(tree(r, d, nodes))),
        1 => Expr::Sub(b(tree(r, d, nodes)), b(tree(r, d, nodes))),
        2 => Expr::Mul(b(tree(r, d, nodes)), b(tree(r, d, nodes))),
        3 => Expr::Div(b(tree(r, d, nodes)), b(tree(r, d, nodes))),
        4 => Expr::Neg(b(tree(r, d, nodes))),
        5 => Expr::Sqrt(b(tree(r, d, nodes))),
        6 => {
            let k = if nodes == Nodes::RulerCompass { r.gen_range(1..=3) } else { r.gen_range(-2..=3) };
            Expr::Pow(b(tree(r, d, nodes)), k)
        }
        7 => Expr::Sqrt(b(tree(r, d, nodes))),
        _ => Expr::Root(r.gen_range(2..=5), b(tree(r, d, nodes))),
    }
}

fn leaf(r: &mut ChaCha8Rng, nodes: Nodes) -> Expr {
    if nodes == Nodes::RulerCompass {
        return small_rational(r);
    }
    match r.gen_range(0..10) {
        0 | 1 => {
            let q: i64 = r.gen_range(1..=12);
            let p: i64 = r.gen_range(0..=q);
            Expr::Cos2Pi(BigRational::new(p.into(), q.into()))
        }
        2 if nodes == Nodes::All => {
            let c = NamedConstant::ALL[r.gen_range(0..NamedConstant::ALL.len())];
            Expr::Const(c)
        }
        3 if nodes == Nodes::All => {
            let deg = r.gen_range(1..=4);
            let mut coeffs: Vec<BigInt> = (0..deg).map(|_| BigInt::from(r.gen_range(-5..=5))).collect();
            coeffs.push(BigInt::from(r.gen_range(1..=3)));
            Expr::RootOf(IntPoly::new(coeffs), r.gen_range(1..=3))
        }
        _ => small_rational(r),
    }
}
