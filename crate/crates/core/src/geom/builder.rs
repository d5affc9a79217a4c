//! Macro layer used by the compilers. Every number lives as a point on the
//! baseline; each emitted step is also evaluated at a fixed precision so that
//! intersection picks can be decided while building.

use super::interp::{self, Ctx, Fail, Obj, Pt};
use super::program::{BasePoint, Instruction, Pick, Program};
use super::CompileError;
use crate::algnum::AlgebraicNumber;
use crate::classify::Tier;
use crate::poly::DyadicInterval;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

const BUILD_PREC: i64 = 320;

/// A length: the point `(val, 0)`.
#[derive(Clone, Debug)]
pub(crate) struct Len {
    pub pt: usize,
    pub val: AlgebraicNumber,
}

fn approx(v: &DyadicInterval) -> f64 {
    v.midpoint().to_f64()
}

fn approx_pt(p: &Pt) -> (f64, f64) {
    (approx(&p.x), approx(&p.y))
}

fn dist2(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)
}

pub(crate) struct Builder {
    instrs: Vec<Instruction>,
    objs: Vec<Obj>,
    tier: Tier,
    o: usize,
    u: usize,
    xaxis: usize,
    unit_circle: Option<usize>,
    yaxis: Option<usize>,
    v1: Option<usize>,
    parabola: Option<usize>,
}

impl Builder {
    pub fn new(tier: Tier) -> Self {
        let mut b = Builder {
            instrs: Vec::new(),
            objs: Vec::new(),
            tier,
            o: 0,
            u: 0,
            xaxis: 0,
            unit_circle: None,
            yaxis: None,
            v1: None,
            parabola: None,
        };
        b.o = b.emit(Instruction::Base(BasePoint::Origin)).expect("base point");
        b.u = b.emit(Instruction::Base(BasePoint::Unit)).expect("base point");
        b.xaxis = b.emit(Instruction::LineThrough(b.o, b.u)).expect("baseline");
        b
    }

    fn ctx(&self) -> Ctx {
        Ctx { prec: BUILD_PREC, step: self.instrs.len() }
    }

    fn lift(f: Fail) -> CompileError {
        match f {
            Fail::Retry(e) | Fail::Fatal(e) => CompileError::Geom(e),
        }
    }

    fn emit(&mut self, ins: Instruction) -> Result<usize, CompileError> {
        let obj = interp::step(&self.ctx(), &ins, &self.objs).map_err(Self::lift)?;
        self.instrs.push(ins);
        self.objs.push(obj);
        Ok(self.instrs.len() - 1)
    }

    pub fn finish(mut self, out: &Len) -> Result<Program, CompileError> {
        self.instrs.push(Instruction::OutputLength(self.o, out.pt));
        Ok(Program::new(self.instrs, self.tier)?)
    }

    fn point(&self, i: usize) -> &Pt {
        match &self.objs[i] {
            Obj::Point(p) => p,
            _ => unreachable!("point id"),
        }
    }

    fn line_of(&self, i: usize) -> (&Pt, &Pt) {
        match &self.objs[i] {
            Obj::Line { p, d } => (p, d),
            _ => unreachable!("line id"),
        }
    }

    fn circle_of(&self, i: usize) -> (&Pt, &DyadicInterval) {
        match &self.objs[i] {
            Obj::Circle { c, r2 } => (c, r2),
            _ => unreachable!("circle id"),
        }
    }

    /// Selector that picks `cands[want]` out of two candidates.
    fn pick_for(cands: &[Pt; 2], want: usize) -> Pick {
        let (a, b) = (approx_pt(&cands[0]), approx_pt(&cands[1]));
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let first_lower = if dx.abs() >= dy.abs() { dx > 0.0 } else { dy > 0.0 };
        let lower = (want == 0) == first_lower;
        match (dx.abs() >= dy.abs(), lower) {
            (true, true) => Pick::LowerX,
            (true, false) => Pick::HigherX,
            (false, true) => Pick::LowerY,
            (false, false) => Pick::HigherY,
        }
    }

    fn other_than(&self, cands: &[Pt; 2], known: usize) -> usize {
        let k = approx_pt(self.point(known));
        if dist2(approx_pt(&cands[0]), k) > dist2(approx_pt(&cands[1]), k) {
            0
        } else {
            1
        }
    }

    pub fn line(&mut self, a: usize, b: usize) -> Result<usize, CompileError> {
        self.emit(Instruction::LineThrough(a, b))
    }

    pub fn circle(&mut self, c: usize, through: usize) -> Result<usize, CompileError> {
        self.emit(Instruction::CircleCenterThrough(c, through))
    }

    fn ll(&mut self, a: usize, b: usize) -> Result<usize, CompileError> {
        self.emit(Instruction::IntersectLineLine(a, b))
    }

    fn lc_with(&mut self, l: usize, c: usize, choose: impl Fn(&Self, &[Pt; 2]) -> usize) -> Result<usize, CompileError> {
        let cands = interp::line_circle(&self.ctx(), self.line_of(l), self.circle_of(c)).map_err(Self::lift)?;
        let pick = Self::pick_for(&cands, choose(self, &cands));
        self.emit(Instruction::IntersectLineCircle(l, c, pick))
    }

    fn lc(&mut self, l: usize, c: usize, pick: Pick) -> Result<usize, CompileError> {
        self.emit(Instruction::IntersectLineCircle(l, c, pick))
    }

    fn lc_other(&mut self, l: usize, c: usize, known: usize) -> Result<usize, CompileError> {
        self.lc_with(l, c, |b, cands| b.other_than(cands, known))
    }

    fn cc_pair(&mut self, c1: usize, c2: usize) -> Result<(usize, usize), CompileError> {
        let cands = interp::circle_circle(&self.ctx(), self.circle_of(c1), self.circle_of(c2)).map_err(Self::lift)?;
        let a = self.emit(Instruction::IntersectCircleCircle(c1, c2, Self::pick_for(&cands, 0)))?;
        let b = self.emit(Instruction::IntersectCircleCircle(c1, c2, Self::pick_for(&cands, 1)))?;
        Ok((a, b))
    }

    fn unit_circle(&mut self) -> Result<usize, CompileError> {
        if let Some(c) = self.unit_circle {
            return Ok(c);
        }
        let c = self.circle(self.o, self.u)?;
        self.unit_circle = Some(c);
        Ok(c)
    }

    fn perp_bisector(&mut self, p: usize, q: usize) -> Result<usize, CompileError> {
        let c1 = self.circle(p, q)?;
        let c2 = self.circle(q, p)?;
        let (a, b) = self.cc_pair(c1, c2)?;
        self.line(a, b)
    }

    fn yaxis(&mut self) -> Result<usize, CompileError> {
        if let Some(l) = self.yaxis {
            return Ok(l);
        }
        let uc = self.unit_circle()?;
        let um = self.lc_other(self.xaxis, uc, self.u)?;
        let l = self.perp_bisector(um, self.u)?;
        self.yaxis = Some(l);
        Ok(l)
    }

    /// The point `(0, 1)`.
    fn v1(&mut self) -> Result<usize, CompileError> {
        if let Some(p) = self.v1 {
            return Ok(p);
        }
        let y = self.yaxis()?;
        let uc = self.unit_circle()?;
        let p = self.lc(y, uc, Pick::HigherY)?;
        self.v1 = Some(p);
        Ok(p)
    }

    fn midpoint(&mut self, p: usize, q: usize, through: Option<usize>) -> Result<usize, CompileError> {
        let bis = self.perp_bisector(p, q)?;
        let l = match through {
            Some(l) => l,
            None => self.line(p, q)?,
        };
        self.ll(bis, l)
    }

    /// Mirror image of `p` in the point `m`.
    fn reflect(&mut self, p: usize, m: usize) -> Result<usize, CompileError> {
        let c = self.circle(m, p)?;
        let l = self.line(p, m)?;
        self.lc_other(l, c, p)
    }

    /// `r + (p2 - p1)`.
    fn translate(&mut self, r: usize, p1: usize, p2: usize) -> Result<usize, CompileError> {
        let m = self.midpoint(r, p2, None)?;
        self.reflect(p1, m)
    }

    pub fn zero(&self) -> Len {
        Len { pt: self.o, val: AlgebraicNumber::zero() }
    }

    pub fn one(&self) -> Len {
        Len { pt: self.u, val: AlgebraicNumber::one() }
    }

    pub fn neg(&mut self, a: &Len) -> Result<Len, CompileError> {
        if a.val.is_zero() {
            return Ok(a.clone());
        }
        let c = self.circle(self.o, a.pt)?;
        let pt = self.lc_other(self.xaxis, c, a.pt)?;
        Ok(Len { pt, val: a.val.neg() })
    }

    /// Reflects the origin through `m` on the baseline.
    fn double_from(&mut self, m: usize, val: AlgebraicNumber) -> Result<Len, CompileError> {
        let c = self.circle(m, self.o)?;
        let pt = self.lc_other(self.xaxis, c, self.o)?;
        Ok(Len { pt, val })
    }

    pub fn add(&mut self, a: &Len, b: &Len) -> Result<Len, CompileError> {
        let val = a.val.add(&b.val);
        if a.val.is_zero() {
            return Ok(b.clone());
        }
        if b.val.is_zero() {
            return Ok(a.clone());
        }
        if val.is_zero() {
            return Ok(self.zero());
        }
        if a.val == b.val {
            return self.double_from(a.pt, val);
        }
        let m = self.midpoint(a.pt, b.pt, Some(self.xaxis))?;
        self.double_from(m, val)
    }

    pub fn sub(&mut self, a: &Len, b: &Len) -> Result<Len, CompileError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    fn rotate_up(&mut self, a: &Len) -> Result<usize, CompileError> {
        let y = self.yaxis()?;
        let c = self.circle(self.o, a.pt)?;
        let pick = if a.val.signum() == Ordering::Greater { Pick::HigherY } else { Pick::LowerY };
        self.lc(y, c, pick)
    }

    fn rotate_down(&mut self, p: usize, val: AlgebraicNumber) -> Result<Len, CompileError> {
        let c = self.circle(self.o, p)?;
        let pick = if val.signum() == Ordering::Greater { Pick::HigherX } else { Pick::LowerX };
        let pt = self.lc(self.xaxis, c, pick)?;
        Ok(Len { pt, val })
    }

    /// The point `(x, y)`.
    fn point_xy(&mut self, x: &Len, y: &Len) -> Result<usize, CompileError> {
        if y.val.is_zero() {
            return Ok(x.pt);
        }
        let yv = self.rotate_up(y)?;
        if x.val.is_zero() {
            return Ok(yv);
        }
        self.translate(x.pt, self.o, yv)
    }

    /// Intercept theorem: the parallel to `U (0,b)` through `(a,0)` meets the
    /// y-axis at `(0, ab)`.
    pub fn mul(&mut self, a: &Len, b: &Len) -> Result<Len, CompileError> {
        if a.val.is_zero() || b.val.is_zero() {
            return Ok(self.zero());
        }
        if a.val.is_one() {
            return Ok(b.clone());
        }
        if b.val.is_one() {
            return Ok(a.clone());
        }
        let val = a.val.mul(&b.val);
        let bv = self.rotate_up(b)?;
        let t = self.translate(a.pt, self.u, bv)?;
        let l = self.line(a.pt, t)?;
        let y = self.yaxis()?;
        let p = self.ll(y, l)?;
        self.rotate_down(p, val)
    }

    /// The parallel to `(0,b) (a,0)` through `(0,1)` meets the baseline at
    /// `(a/b, 0)`.
    pub fn div(&mut self, a: &Len, b: &Len) -> Result<Len, CompileError> {
        let val = a.val.div(&b.val).map_err(|e| CompileError::Eval(e.into()))?;
        if a.val.is_zero() {
            return Ok(self.zero());
        }
        if b.val.is_one() {
            return Ok(a.clone());
        }
        let bv = self.rotate_up(b)?;
        let v1 = self.v1()?;
        let t = self.translate(v1, bv, a.pt)?;
        let l = self.line(v1, t)?;
        let pt = self.ll(self.xaxis, l)?;
        Ok(Len { pt, val })
    }

    /// Geometric mean of 1 and `a` on the semicircle over `[-1, a]`.
    pub fn sqrt(&mut self, a: &Len) -> Result<Len, CompileError> {
        let val = a.val.sqrt().map_err(|e| CompileError::Eval(e.into()))?;
        if a.val.is_zero() || a.val.is_one() {
            return Ok(a.clone());
        }
        let uc = self.unit_circle()?;
        let um = self.lc_other(self.xaxis, uc, self.u)?;
        let m = self.midpoint(um, a.pt, Some(self.xaxis))?;
        let c = self.circle(m, a.pt)?;
        let y = self.yaxis()?;
        let p = self.lc(y, c, Pick::HigherY)?;
        self.rotate_down(p, val)
    }

    pub fn int(&mut self, n: &BigInt) -> Result<Len, CompileError> {
        if n.is_zero() {
            return Ok(self.zero());
        }
        if n.is_negative() {
            let p = self.int(&-n)?;
            return self.neg(&p);
        }
        let mut acc = self.one();
        for bit in n.to_str_radix(2).chars().skip(1) {
            acc = self.add(&acc.clone(), &acc)?;
            if bit == '1' {
                let one = self.one();
                acc = self.add(&acc, &one)?;
            }
        }
        Ok(acc)
    }

    pub fn rational(&mut self, r: &BigRational) -> Result<Len, CompileError> {
        let num = self.int(r.numer())?;
        if r.denom().is_one() {
            return Ok(num);
        }
        let den = self.int(r.denom())?;
        self.div(&num, &den)
    }

    /// Line `x = r.val`.
    fn vertical(&mut self, r: &Len) -> Result<usize, CompileError> {
        if r.val.is_zero() {
            return self.yaxis();
        }
        let v1 = self.v1()?;
        let up = self.translate(r.pt, self.o, v1)?;
        self.line(r.pt, up)
    }

    /// Root of `m^3 + p m + r = 0` nearest `target`, via one fold: the crease
    /// is the common tangent `y = m x + m^2` of `x^2 = -4y` and the parabola
    /// with focus `(-r, -p)` and directrix `x = r`.
    pub fn fold_cubic(&mut self, p: &Len, r: &Len, target: &AlgebraicNumber) -> Result<Len, CompileError> {
        if target.is_zero() {
            return Ok(self.zero());
        }
        let y = self.yaxis()?;
        let uc = self.unit_circle()?;
        let f1 = self.lc(y, uc, Pick::LowerY)?;
        let v1 = self.v1()?;
        let w = self.translate(v1, self.o, self.u)?;
        let l1 = self.line(v1, w)?;
        let fx = self.neg(r)?;
        let fy = self.neg(p)?;
        let f2 = self.point_xy(&fx, &fy)?;
        let l2 = self.vertical(r)?;
        let creases = interp::fold(&self.ctx(), self.point(f1), self.line_of(l1), self.point(f2), self.line_of(l2))
            .map_err(Self::lift)?;
        let want = target.to_f64();
        let xaxis = self.line_of(self.xaxis);
        let index = creases
            .iter()
            .enumerate()
            .filter_map(|(i, (cp, cd))| {
                let hit = interp::line_line(&self.ctx(), (cp, cd), xaxis).ok()?;
                Some((i, (-approx(&hit.x) - want).abs()))
            })
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
            .ok_or_else(|| CompileError::Unconstructible("no usable crease".into()))?;
        let crease = self.emit(Instruction::FoldO6 { p1: f1, l1, p2: f2, l2, index })?;
        let hit = self.ll(crease, self.xaxis)?;
        let minus = Len { pt: hit, val: target.neg() };
        self.neg(&minus)
    }

    fn parabola(&mut self) -> Result<usize, CompileError> {
        if let Some(p) = self.parabola {
            return Ok(p);
        }
        let p = self.emit(Instruction::ParabolaUnit { origin: self.o, toward: self.u })?;
        self.parabola = Some(p);
        Ok(p)
    }

    /// Root of `x^3 + a x = b` nearest `target`: the circle through the
    /// origin centred at `(b/2, (1-a)/2)` meets `y = x^2` at the roots.
    pub fn conic_cubic(&mut self, a: &Len, b: &Len, target: &AlgebraicNumber) -> Result<Len, CompileError> {
        if target.is_zero() {
            return Ok(self.zero());
        }
        if b.val.is_zero() {
            // x^2 = -a
            let na = self.neg(a)?;
            let s = self.sqrt(&na)?;
            return if target.signum() == Ordering::Less { self.neg(&s) } else { Ok(s) };
        }
        let two = self.int(&BigInt::from(2))?;
        let cx = self.div(b, &two)?;
        let one = self.one();
        let oma = self.sub(&one, a)?;
        let cy = self.div(&oma, &two)?;
        let center = self.point_xy(&cx, &cy)?;
        let circle = self.circle(center, self.o)?;
        let par = self.parabola()?;
        let (po, pe) = match &self.objs[par] {
            Obj::Parabola { o, e1 } => (o.clone(), e1.clone()),
            _ => unreachable!("parabola id"),
        };
        let hits = interp::circle_parabola(&self.ctx(), self.circle_of(circle), (&po, &pe)).map_err(Self::lift)?;
        let want = target.to_f64();
        let index = hits
            .iter()
            .enumerate()
            .min_by(|x, y| (approx(&x.1.x) - want).abs().total_cmp(&(approx(&y.1.x) - want).abs()))
            .map(|(i, _)| i)
            .ok_or_else(|| CompileError::Unconstructible("circle misses the parabola".into()))?;
        let hit = self.emit(Instruction::IntersectCircleParabola { circle, parabola: par, index })?;
        // foot of the perpendicular: the circle about the hit through O meets
        // the baseline again at (2x, 0)
        let c = self.circle(hit, self.o)?;
        let twice = self.lc_other(self.xaxis, c, self.o)?;
        let pt = self.midpoint(self.o, twice, Some(self.xaxis))?;
        Ok(Len { pt, val: target.clone() })
    }
}

/// `n = 2^i 3^j`, as `(i, j)`.
pub(crate) fn two_three(mut n: u32) -> Option<(u32, u32)> {
    if n == 0 {
        return None;
    }
    let (mut i, mut j) = (0, 0);
    while n.is_even() {
        n /= 2;
        i += 1;
    }
    while n % 3 == 0 {
        n /= 3;
        j += 1;
    }
    (n == 1).then_some((i, j))
}
