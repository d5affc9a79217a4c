use super::numeric::{certified_roots, int, ipoly, is_exact_zero, RootFail, I};
use super::program::{BasePoint, Instruction, Pick, Program};
use super::GeomError;
use crate::poly::{Dyadic, DyadicInterval};
use std::cmp::Ordering;

pub(crate) const START_PREC: i64 = 64;
pub(crate) const MAX_PREC: i64 = 1 << 13;

#[derive(Clone, Debug)]
pub(crate) struct Pt {
    pub x: I,
    pub y: I,
}

#[derive(Clone, Debug)]
pub(crate) enum Obj {
    Point(Pt),
    /// Through `p` with direction `d`.
    Line { p: Pt, d: Pt },
    Circle { c: Pt, r2: I },
    Parabola { o: Pt, e1: Pt },
    Output(I),
}

/// A step failure: `Retry` may go away at higher precision, `Fatal` will not.
#[derive(Debug, Clone)]
pub(crate) enum Fail {
    Retry(GeomError),
    Fatal(GeomError),
}

/// Interval arithmetic at one working precision.
#[derive(Clone, Copy)]
pub(crate) struct Ctx {
    pub prec: i64,
    pub step: usize,
}

impl Ctx {
    fn mul(&self, a: &I, b: &I) -> I {
        a.mul(b).round_out(self.prec)
    }

    fn div(&self, a: &I, b: &I) -> Result<I, Fail> {
        a.div(b, self.prec).ok_or_else(|| self.unresolved_degenerate(b))
    }

    fn dot(&self, a: &Pt, b: &Pt) -> I {
        self.mul(&a.x, &b.x).add(&self.mul(&a.y, &b.y))
    }

    fn cross(&self, a: &Pt, b: &Pt) -> I {
        self.mul(&a.x, &b.y).sub(&self.mul(&a.y, &b.x))
    }

    fn scale(&self, a: &Pt, t: &I) -> Pt {
        Pt { x: self.mul(&a.x, t), y: self.mul(&a.y, t) }
    }

    fn degenerate(&self) -> GeomError {
        GeomError::DegenerateIntersection { step: self.step }
    }

    /// A zero-straddling denominator: fatal when it is exactly zero.
    fn unresolved_degenerate(&self, v: &I) -> Fail {
        if is_exact_zero(v) {
            Fail::Fatal(self.degenerate())
        } else {
            Fail::Retry(self.degenerate())
        }
    }

    fn nonzero(&self, v: &I) -> Result<(), Fail> {
        if v.contains_zero() {
            Err(self.unresolved_degenerate(v))
        } else {
            Ok(())
        }
    }

    fn roots(&self, coeffs: &[I]) -> Result<Vec<I>, Fail> {
        certified_roots(coeffs, self.prec).map_err(|f| match f {
            RootFail::Vanishes => Fail::Fatal(self.degenerate()),
            RootFail::Unresolved => Fail::Retry(self.degenerate()),
        })
    }
}

fn add(a: &Pt, b: &Pt) -> Pt {
    Pt { x: a.x.add(&b.x), y: a.y.add(&b.y) }
}

fn sub(a: &Pt, b: &Pt) -> Pt {
    Pt { x: a.x.sub(&b.x), y: a.y.sub(&b.y) }
}

fn perp(a: &Pt) -> Pt {
    Pt { x: a.y.neg(), y: a.x.clone() }
}

fn half() -> I {
    DyadicInterval::point(Dyadic::pow2(-1))
}

pub(crate) fn line_line(cx: &Ctx, (p1, d1): (&Pt, &Pt), (p2, d2): (&Pt, &Pt)) -> Result<Pt, Fail> {
    let den = cx.cross(d1, d2);
    cx.nonzero(&den)?;
    let t = cx.div(&cx.cross(&sub(p2, p1), d2), &den)?;
    Ok(add(p1, &cx.scale(d1, &t)))
}

pub(crate) fn line_circle(cx: &Ctx, (p, d): (&Pt, &Pt), (c, r2): (&Pt, &I)) -> Result<[Pt; 2], Fail> {
    let a = cx.dot(d, d);
    cx.nonzero(&a)?;
    let w = sub(p, c);
    let b = cx.mul(&int(2), &cx.dot(d, &w));
    let cc = cx.dot(&w, &w).sub(r2);
    let disc = cx.mul(&b, &b).sub(&cx.mul(&int(4), &cx.mul(&a, &cc)));
    match disc.strict_sign() {
        Some(Ordering::Greater) => {}
        Some(_) => return Err(Fail::Fatal(GeomError::NoIntersection { step: cx.step })),
        None => return Err(cx.unresolved_degenerate(&disc)),
    }
    let s = disc.sqrt(cx.prec).expect("positive discriminant");
    let two_a = cx.mul(&int(2), &a);
    let t1 = cx.div(&b.neg().sub(&s), &two_a)?;
    let t2 = cx.div(&b.neg().add(&s), &two_a)?;
    Ok([add(p, &cx.scale(d, &t1)), add(p, &cx.scale(d, &t2))])
}

pub(crate) fn circle_circle(cx: &Ctx, (c1, r1): (&Pt, &I), (c2, r2): (&Pt, &I)) -> Result<[Pt; 2], Fail> {
    // radical line n . X = k
    let n = sub(c2, c1);
    let nn = cx.dot(&n, &n);
    cx.nonzero(&nn)?;
    let k = cx.mul(&half(), &r1.sub(r2).add(&cx.dot(c2, c2)).sub(&cx.dot(c1, c1)));
    let x0 = cx.scale(&n, &cx.div(&k, &nn)?);
    line_circle(cx, (&x0, &perp(&n)), (c1, r1))
}

pub(crate) fn select(cx: &Ctx, cands: &[Pt; 2], pick: Pick) -> Result<Pt, Fail> {
    let (a, b) = match pick {
        Pick::LowerX | Pick::HigherX => (&cands[0].x, &cands[1].x),
        Pick::LowerY | Pick::HigherY => (&cands[0].y, &cands[1].y),
    };
    if !a.is_disjoint_from(b) {
        let exact_tie = a.width().is_zero() && a == b;
        let e = GeomError::AmbiguousPick { step: cx.step };
        return Err(if exact_tie { Fail::Fatal(e) } else { Fail::Retry(e) });
    }
    let first_lower = a.hi < b.lo;
    let want_lower = matches!(pick, Pick::LowerX | Pick::LowerY);
    Ok(if first_lower == want_lower { cands[0].clone() } else { cands[1].clone() })
}

/// Creases putting `f1` on `l1` and `f2` on `l2`, ordered by where `f1` lands
/// along `l1`.
pub(crate) fn fold(cx: &Ctx, f1: &Pt, (a1, d1): (&Pt, &Pt), f2: &Pt, (a2, d2): (&Pt, &Pt)) -> Result<Vec<(Pt, Pt)>, Fail> {
    let p = cx.prec;
    // landing point q(s) = a1 + s d1, crease normal n(s) = q(s) - f1
    let qx = vec![a1.x.clone(), d1.x.clone()];
    let qy = vec![a1.y.clone(), d1.y.clone()];
    let nx = vec![a1.x.sub(&f1.x), d1.x.clone()];
    let ny = vec![a1.y.sub(&f1.y), d1.y.clone()];
    let nn = ipoly::add(&ipoly::mul(&nx, &nx, p), &ipoly::mul(&ny, &ny, p));
    // crease: n . X = c with c = (|q|^2 - |f1|^2) / 2
    let qq = ipoly::add(&ipoly::mul(&qx, &qx, p), &ipoly::mul(&qy, &qy, p));
    let c = ipoly::scale(&ipoly::sub(&qq, &[cx.dot(f1, f1)]), &half(), p);
    // reflection of f2 lies on l2:
    // |n|^2 cross(d2, f2 - a2) - 2 (n . f2 - c) cross(d2, n) = 0
    let k = cx.cross(d2, &sub(f2, a2));
    let nf2 = ipoly::add(&ipoly::scale(&nx, &f2.x, p), &ipoly::scale(&ny, &f2.y, p));
    let d2n = ipoly::sub(&ipoly::scale(&ny, &d2.x, p), &ipoly::scale(&nx, &d2.y, p));
    let g = ipoly::sub(
        &ipoly::scale(&nn, &k, p),
        &ipoly::scale(&ipoly::mul(&ipoly::sub(&nf2, &c), &d2n, p), &int(2), p),
    );
    let mut out = Vec::new();
    for s in cx.roots(&g)? {
        let q = Pt { x: a1.x.add(&cx.mul(&d1.x, &s)), y: a1.y.add(&cx.mul(&d1.y, &s)) };
        let n = sub(&q, f1);
        cx.nonzero(&cx.dot(&n, &n))?;
        let mid = cx.scale(&add(&q, f1), &half());
        out.push((mid, perp(&n)));
    }
    Ok(out)
}

/// Points where the circle meets the parabola, ordered by frame x-coordinate.
pub(crate) fn circle_parabola(cx: &Ctx, (c, r2): (&Pt, &I), (o, e1): (&Pt, &Pt)) -> Result<Vec<Pt>, Fail> {
    let e2 = perp(e1);
    let ll = cx.dot(e1, e1);
    cx.nonzero(&ll)?;
    let w = sub(c, o);
    let cu = cx.div(&cx.dot(&w, e1), &ll)?;
    let cv = cx.div(&cx.dot(&w, &e2), &ll)?;
    let rr = cx.div(r2, &ll)?;
    // (u - cu)^2 + (u^2 - cv)^2 = rr
    let coeffs = vec![
        cx.mul(&cu, &cu).add(&cx.mul(&cv, &cv)).sub(&rr),
        cx.mul(&int(-2), &cu),
        int(1).sub(&cx.mul(&int(2), &cv)),
        int(0),
        int(1),
    ];
    Ok(cx
        .roots(&coeffs)?
        .into_iter()
        .map(|u| {
            let uu = cx.mul(&u, &u);
            add(&add(o, &cx.scale(e1, &u)), &cx.scale(&e2, &uu))
        })
        .collect())
}

fn point(objs: &[Obj], i: usize) -> &Pt {
    match &objs[i] {
        Obj::Point(p) => p,
        _ => unreachable!("validated program"),
    }
}

fn line(objs: &[Obj], i: usize) -> (&Pt, &Pt) {
    match &objs[i] {
        Obj::Line { p, d } => (p, d),
        _ => unreachable!("validated program"),
    }
}

fn circle(objs: &[Obj], i: usize) -> (&Pt, &I) {
    match &objs[i] {
        Obj::Circle { c, r2 } => (c, r2),
        _ => unreachable!("validated program"),
    }
}

fn indexed<T>(cx: &Ctx, mut v: Vec<T>, index: usize) -> Result<T, Fail> {
    if index >= v.len() {
        return Err(Fail::Fatal(GeomError::PickOutOfRange { step: cx.step, index, count: v.len() }));
    }
    Ok(v.swap_remove(index))
}

pub(crate) fn step(cx: &Ctx, ins: &Instruction, objs: &[Obj]) -> Result<Obj, Fail> {
    use Instruction::*;
    Ok(match *ins {
        Base(BasePoint::Origin) => Obj::Point(Pt { x: int(0), y: int(0) }),
        Base(BasePoint::Unit) => Obj::Point(Pt { x: int(1), y: int(0) }),
        LineThrough(a, b) => {
            let (p, q) = (point(objs, a), point(objs, b));
            let d = sub(q, p);
            cx.nonzero(&cx.dot(&d, &d))?;
            Obj::Line { p: p.clone(), d }
        }
        CircleCenterThrough(a, b) => {
            let (c, q) = (point(objs, a), point(objs, b));
            let w = sub(q, c);
            Obj::Circle { c: c.clone(), r2: cx.dot(&w, &w) }
        }
        IntersectLineLine(a, b) => Obj::Point(line_line(cx, line(objs, a), line(objs, b))?),
        IntersectLineCircle(a, b, pick) => {
            Obj::Point(select(cx, &line_circle(cx, line(objs, a), circle(objs, b))?, pick)?)
        }
        IntersectCircleCircle(a, b, pick) => {
            Obj::Point(select(cx, &circle_circle(cx, circle(objs, a), circle(objs, b))?, pick)?)
        }
        FoldO6 { p1, l1, p2, l2, index } => {
            let creases = fold(cx, point(objs, p1), line(objs, l1), point(objs, p2), line(objs, l2))?;
            let (p, d) = indexed(cx, creases, index)?;
            Obj::Line { p, d }
        }
        ParabolaUnit { origin, toward } => {
            let o = point(objs, origin);
            let e1 = sub(point(objs, toward), o);
            cx.nonzero(&cx.dot(&e1, &e1))?;
            Obj::Parabola { o: o.clone(), e1 }
        }
        IntersectCircleParabola { circle: c, parabola, index } => {
            let (o, e1) = match &objs[parabola] {
                Obj::Parabola { o, e1 } => (o, e1),
                _ => unreachable!("validated program"),
            };
            Obj::Point(indexed(cx, circle_parabola(cx, circle(objs, c), (o, e1))?, index)?)
        }
        OutputLength(a, b) => Obj::Output(point(objs, b).x.sub(&point(objs, a).x)),
    })
}

fn run(p: &Program, prec: i64) -> Result<I, Fail> {
    let mut objs = Vec::with_capacity(p.len());
    for (k, ins) in p.instructions().iter().enumerate() {
        let cx = Ctx { prec, step: k };
        objs.push(step(&cx, ins, &objs)?);
    }
    match objs.pop() {
        Some(Obj::Output(v)) => Ok(v),
        _ => unreachable!("validated program"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    /// Encloses the exact output length.
    pub output: DyadicInterval,
    /// Working precision of the last pass, in bits.
    pub precision: i64,
}

fn intersect(a: &I, b: &I) -> I {
    DyadicInterval::new(a.lo.clone().max(b.lo.clone()), a.hi.clone().min(b.hi.clone()))
}

/// Runs the program at doubling precision until the output interval is no
/// wider than `target_width`. Each pass restarts from scratch; the reported
/// interval is the intersection over all successful passes.
pub fn interpret(p: &Program, target_width: &Dyadic) -> Result<Interpretation, GeomError> {
    let mut prec = START_PREC;
    let mut best: Option<I> = None;
    loop {
        match run(p, prec) {
            Ok(v) => {
                let v = match &best {
                    Some(b) => intersect(b, &v),
                    None => v,
                };
                if &v.width() <= target_width {
                    return Ok(Interpretation { output: v, precision: prec });
                }
                best = Some(v);
                if prec >= MAX_PREC {
                    return Err(GeomError::PrecisionExhausted { bits: prec });
                }
            }
            Err(Fail::Fatal(e)) => return Err(e),
            Err(Fail::Retry(e)) => {
                if prec >= MAX_PREC {
                    return Err(e);
                }
            }
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(src: &str) -> Program {
        src.parse().unwrap()
    }

    #[test]
    fn unit_output() {
        let r = interpret(&prog("0: BASE O\n1: BASE U\n2: OUT 0 1\n"), &Dyadic::pow2(-100)).unwrap();
        assert_eq!(r.output, DyadicInterval::point(Dyadic::from_int(1)));
        let r = interpret(&prog("0: BASE O\n1: BASE U\n2: OUT 1 0\n"), &Dyadic::pow2(-100)).unwrap();
        assert_eq!(r.output, DyadicInterval::point(Dyadic::from_int(-1)));
    }

    #[test]
    fn parallel_lines_are_degenerate() {
        let src = "\
0: BASE O
1: BASE U
2: LINE 0 1
3: LINE 1 0
4: LL 2 3
5: OUT 0 4
";
        assert_eq!(
            interpret(&prog(src), &Dyadic::pow2(-10)).unwrap_err(),
            GeomError::DegenerateIntersection { step: 4 }
        );
    }

    #[test]
    fn equilateral_apex() {
        // apex of the equilateral triangle on OU, projected: x = 1/2
        let src = "\
0: BASE O
1: BASE U
2: CIRCLE 0 1
3: CIRCLE 1 0
4: CC 2 3 HIY
5: OUT 0 4
";
        let r = interpret(&prog(src), &Dyadic::pow2(-100)).unwrap();
        assert!(r.output.contains(&Dyadic::pow2(-1)));
        assert!(r.output.width() <= Dyadic::pow2(-100));
    }

    #[test]
    fn pick_of_coinciding_coordinates_is_ambiguous() {
        // both intersections have x = 1/2
        let src = "\
0: BASE O
1: BASE U
2: CIRCLE 0 1
3: CIRCLE 1 0
4: CC 2 3 LOX
5: OUT 0 4
";
        let err = interpret(&prog(src), &Dyadic::pow2(-10)).unwrap_err();
        assert_eq!(err, GeomError::AmbiguousPick { step: 4 });
    }

    #[test]
    fn disjoint_and_tangent_circles() {
        let base = "\
0: BASE O
1: BASE U
2: LINE 0 1
3: CIRCLE 1 0
4: LC 2 3 HIX
5: CIRCLE 4 1
6: LC 2 5 HIX
7: CIRCLE 6 4
8: CIRCLE 0 1
";
        // unit circles about 0 and 3 miss each other
        let src = format!("{base}9: CC 7 8 LOY\n10: OUT 0 9\n");
        assert_eq!(
            interpret(&prog(&src), &Dyadic::pow2(-10)).unwrap_err(),
            GeomError::NoIntersection { step: 9 }
        );
        // unit circles about 0 and 2 touch at U
        let src = format!("{base}9: CC 5 8 LOY\n10: OUT 0 9\n");
        assert_eq!(
            interpret(&prog(&src), &Dyadic::pow2(-10)).unwrap_err(),
            GeomError::DegenerateIntersection { step: 9 }
        );
        let src = format!("{base}9: OUT 0 6\n");
        let r = interpret(&prog(&src), &Dyadic::pow2(-10)).unwrap();
        assert_eq!(r.output, DyadicInterval::point(Dyadic::from_int(3)));
    }
}
