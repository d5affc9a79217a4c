use super::builder::{two_three, Builder, Len};
use super::{CompileError, Program};
use crate::algnum::{cos2pi, AlgebraicNumber};
use crate::classify::Tier;
use crate::expr::{eval, Expr, NodeKind, Value};
use crate::tower::{smoothness_verdict, Smoothness, DEFAULT_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

/// An expression-to-construction strategy for one tool set.
pub trait Compiler: Send + Sync {
    /// Name used on the command line.
    fn name(&self) -> &'static str;
    fn tier(&self) -> Tier;
    fn admits(&self, kind: NodeKind) -> bool;
    fn compile(&self, e: &Expr) -> Result<Program, CompileError>;
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CubeRoots {
    Forbidden,
    Fold,
    Conic,
}

fn admits(kind: NodeKind, cubes: CubeRoots) -> bool {
    match kind {
        NodeKind::Rational
        | NodeKind::Neg
        | NodeKind::Add
        | NodeKind::Sub
        | NodeKind::Mul
        | NodeKind::Div
        | NodeKind::Pow
        | NodeKind::Sqrt => true,
        NodeKind::Root(k) => match two_three(k) {
            Some((_, 0)) => true,
            Some(_) => cubes != CubeRoots::Forbidden,
            None => false,
        },
        NodeKind::Cos2Pi | NodeKind::RootOf | NodeKind::Const => false,
    }
}

fn describe(kind: NodeKind) -> String {
    match kind {
        NodeKind::Root(k) => format!("root({k},_)"),
        NodeKind::Cos2Pi => "cos2pi".into(),
        NodeKind::RootOf => "rootof".into(),
        NodeKind::Const => "named constant".into(),
        other => format!("{other:?}").to_lowercase(),
    }
}

fn lower(b: &mut Builder, e: &Expr, cubes: CubeRoots) -> Result<Len, CompileError> {
    Ok(match e {
        Expr::Rational(r) => b.rational(r)?,
        Expr::Neg(a) => {
            let a = lower(b, a, cubes)?;
            b.neg(&a)?
        }
        Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
            let x = lower(b, x, cubes)?;
            let y = lower(b, y, cubes)?;
            match e {
                Expr::Add(..) => b.add(&x, &y)?,
                Expr::Sub(..) => b.sub(&x, &y)?,
                Expr::Mul(..) => b.mul(&x, &y)?,
                _ => b.div(&x, &y)?,
            }
        }
        Expr::Pow(a, k) => {
            let base = lower(b, a, cubes)?;
            let mut acc = b.one();
            for bit in format!("{:b}", k.unsigned_abs()).chars() {
                acc = b.mul(&acc.clone(), &acc)?;
                if bit == '1' {
                    acc = b.mul(&acc, &base)?;
                }
            }
            if *k < 0 {
                let one = b.one();
                acc = b.div(&one, &acc)?;
            }
            acc
        }
        Expr::Sqrt(a) => {
            let a = lower(b, a, cubes)?;
            b.sqrt(&a)?
        }
        Expr::Root(k, a) => {
            let (twos, threes) = two_three(*k).expect("fragment checked");
            let mut v = lower(b, a, cubes)?;
            for _ in 0..twos {
                v = b.sqrt(&v)?;
            }
            for _ in 0..threes {
                let target = v.val.real_root(3).map_err(|e| CompileError::Eval(e.into()))?;
                v = match cubes {
                    CubeRoots::Fold => {
                        let zero = b.zero();
                        let r = b.neg(&v)?;
                        b.fold_cubic(&zero, &r, &target)?
                    }
                    CubeRoots::Conic => {
                        let zero = b.zero();
                        b.conic_cubic(&zero, &v, &target)?
                    }
                    CubeRoots::Forbidden => unreachable!("fragment checked"),
                };
            }
            v
        }
        Expr::Cos2Pi(_) | Expr::RootOf(..) | Expr::Const(_) => unreachable!("fragment checked"),
    })
}

fn compile_with(name: &'static str, tier: Tier, cubes: CubeRoots, e: &Expr) -> Result<Program, CompileError> {
    if let Some(kind) = e.find_kind(&|k| admits(k, cubes)) {
        return Err(CompileError::OutsideFragment { tool: name, node: describe(kind) });
    }
    match eval(e)? {
        Value::Algebraic(_) => {}
        Value::NotAlgebraic(c) => return Err(CompileError::NotAlgebraic(c)),
    }
    let mut b = Builder::new(tier);
    let out = lower(&mut b, e, cubes)?;
    b.finish(&out)
}

/// Ruler and compass: rationals, field operations and square roots.
pub struct RulerCompass;

/// Ruler, compass and the O6 fold for cube roots.
pub struct Origami;

/// Ruler, compass and a unit parabola for cube roots.
pub struct Conic;

impl Compiler for RulerCompass {
    fn name(&self) -> &'static str {
        "rc"
    }
    fn tier(&self) -> Tier {
        Tier::RulerCompass
    }
    fn admits(&self, kind: NodeKind) -> bool {
        admits(kind, CubeRoots::Forbidden)
    }
    fn compile(&self, e: &Expr) -> Result<Program, CompileError> {
        compile_with(self.name(), self.tier(), CubeRoots::Forbidden, e)
    }
}

impl Compiler for Origami {
    fn name(&self) -> &'static str {
        "origami"
    }
    fn tier(&self) -> Tier {
        Tier::OrigamiNeusis
    }
    fn admits(&self, kind: NodeKind) -> bool {
        admits(kind, CubeRoots::Fold)
    }
    fn compile(&self, e: &Expr) -> Result<Program, CompileError> {
        compile_with(self.name(), self.tier(), CubeRoots::Fold, e)
    }
}

impl Compiler for Conic {
    fn name(&self) -> &'static str {
        "conic"
    }
    fn tier(&self) -> Tier {
        Tier::Conic
    }
    fn admits(&self, kind: NodeKind) -> bool {
        admits(kind, CubeRoots::Conic)
    }
    fn compile(&self, e: &Expr) -> Result<Program, CompileError> {
        compile_with(self.name(), self.tier(), CubeRoots::Conic, e)
    }
}

/// Compilers looked up by name.
pub struct Registry {
    compilers: Vec<Box<dyn Compiler>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry { compilers: vec![Box::new(RulerCompass), Box::new(Origami), Box::new(Conic)] }
    }
}

impl Registry {
    pub fn empty() -> Self {
        Registry { compilers: Vec::new() }
    }

    /// Adds a compiler, replacing any with the same name.
    pub fn register(&mut self, c: Box<dyn Compiler>) {
        self.compilers.retain(|x| x.name() != c.name());
        self.compilers.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Compiler> {
        self.compilers.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.compilers.iter().map(|c| c.name()).collect()
    }

    pub fn compile(&self, tool: &str, e: &Expr) -> Result<Program, CompileError> {
        self.get(tool).ok_or_else(|| CompileError::UnknownTool(tool.to_string()))?.compile(e)
    }
}

/// Khayyam's construction of the `index`-th real root (ascending, from 0) of
/// `x^3 + a x = b`.
pub fn compile_conic_cubic(a: &BigRational, b: &BigRational, index: usize) -> Result<(Program, AlgebraicNumber), CompileError> {
    let target = cubic_root(a, b, index)?;
    let mut bld = Builder::new(Tier::Conic);
    let la = bld.rational(a)?;
    let lb = bld.rational(b)?;
    let out = bld.conic_cubic(&la, &lb, &target)?;
    Ok((bld.finish(&out)?, target))
}

fn cubic_root(a: &BigRational, b: &BigRational, index: usize) -> Result<AlgebraicNumber, CompileError> {
    // clear denominators of x^3 + a x - b
    let l = a.denom() * b.denom();
    let poly = crate::poly::IntPoly::new(vec![
        -(b.numer() * a.denom()),
        a.numer() * b.denom(),
        BigInt::from(0),
        l,
    ]);
    let roots = AlgebraicNumber::real_roots_of(&poly);
    let count = roots.len();
    roots.into_iter().nth(index).ok_or_else(|| {
        CompileError::Unconstructible(format!("cubic has {count} real roots, index {index} requested"))
    })
}

/// Origami trisection of the angle `2 pi r`: lays down `cos(2 pi r)` with
/// ruler and compass, then one fold solves `4c^3 - 3c = cos(2 pi r)` for
/// `c = cos(2 pi r / 3)`.
pub fn trisect(r: &BigRational) -> Result<(Program, AlgebraicNumber), CompileError> {
    let a = cos2pi(r).map_err(|e| CompileError::Eval(e.into()))?;
    let target = cos2pi(&(r / BigRational::from_integer(3.into()))).map_err(|e| CompileError::Eval(e.into()))?;
    if smoothness_verdict(a.minpoly(), DEFAULT_CAP) != Smoothness::TwoGroup {
        return Err(CompileError::Unconstructible(format!(
            "cos(2 pi {r}) is not constructible with ruler and compass"
        )));
    }
    let cos_expr = quadratic_expr(&a).ok_or_else(|| {
        CompileError::Unconstructible(format!("cos(2 pi {r}) has degree {} (only degree 1 or 2 is laid down)", a.degree()))
    })?;
    if a.is_one() || a.neg().is_one() {
        return Err(CompileError::Unconstructible("a full or half turn gives a repeated fold solution".into()));
    }
    let mut b = Builder::new(Tier::OrigamiNeusis);
    let la = lower(&mut b, &cos_expr, CubeRoots::Forbidden)?;
    // c^3 - (3/4) c - a/4 = 0
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let p = b.rational(&q(-3, 4))?;
    let four = b.int(&BigInt::from(4))?;
    let quarter = b.div(&la, &four)?;
    let rr = b.neg(&quarter)?;
    let out = b.fold_cubic(&p, &rr, &target)?;
    Ok((b.finish(&out)?, target))
}

/// `(u + s sqrt(d)) / v` for a number of degree at most 2.
fn quadratic_expr(a: &AlgebraicNumber) -> Option<Expr> {
    if let Some(r) = a.to_rational() {
        let lit = Expr::Rational(r.abs());
        return Some(if r.is_negative() { Expr::Neg(Box::new(lit)) } else { lit });
    }
    if a.degree() != 2 {
        return None;
    }
    let c = a.minpoly().coeffs();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc = c1 * c1 - BigInt::from(4) * c0 * c2;
    let big = |v: &BigInt| {
        let lit = Expr::Rational(BigRational::from_integer(v.abs()));
        if v.is_negative() { Expr::Neg(Box::new(lit)) } else { lit }
    };
    let root = Expr::Sqrt(Box::new(big(&disc)));
    let plus = Expr::Add(Box::new(big(&-c1)), Box::new(root.clone()));
    let minus = Expr::Sub(Box::new(big(&-c1)), Box::new(root));
    let den = big(&(BigInt::from(2) * c2));
    [plus, minus]
        .into_iter()
        .map(|n| Expr::Div(Box::new(n), Box::new(den.clone())))
        .find(|e| matches!(eval(e), Ok(Value::Algebraic(v)) if &v == a))
}
