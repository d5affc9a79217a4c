use super::GeomError;
use crate::classify::Tier;
use std::fmt;
use std::str::FromStr;

/// Selector between the two points where a line or circle meets a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pick {
    LowerX,
    HigherX,
    LowerY,
    HigherY,
}

impl Pick {
    pub fn token(self) -> &'static str {
        match self {
            Pick::LowerX => "LOX",
            Pick::HigherX => "HIX",
            Pick::LowerY => "LOY",
            Pick::HigherY => "HIY",
        }
    }

    fn from_token(s: &str) -> Option<Pick> {
        Some(match s {
            "LOX" => Pick::LowerX,
            "HIX" => Pick::HigherX,
            "LOY" => Pick::LowerY,
            "HIY" => Pick::HigherY,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasePoint {
    /// `(0, 0)`
    Origin,
    /// `(1, 0)`
    Unit,
}

/// One construction step. Operands are ids of earlier steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Instruction {
    Base(BasePoint),
    LineThrough(usize, usize),
    /// Circle with the given center passing through the second point.
    CircleCenterThrough(usize, usize),
    IntersectLineLine(usize, usize),
    IntersectLineCircle(usize, usize, Pick),
    IntersectCircleCircle(usize, usize, Pick),
    /// Crease placing the first point on the first line and the second point
    /// on the second line; solutions ordered by where the first point lands
    /// along the first line.
    FoldO6 { p1: usize, l1: usize, p2: usize, l2: usize, index: usize },
    /// `y = x^2` in the frame with origin `origin` and unit x-vector
    /// `toward - origin`.
    ParabolaUnit { origin: usize, toward: usize },
    /// Intersections ordered by the frame x-coordinate.
    IntersectCircleParabola { circle: usize, parabola: usize, index: usize },
    /// Signed length `b.x - a.x` measured along the baseline.
    OutputLength(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjKind {
    Point,
    Line,
    Circle,
    Parabola,
    Output,
}

impl Instruction {
    pub fn kind(&self) -> ObjKind {
        use Instruction::*;
        match self {
            Base(_) | IntersectLineLine(..) | IntersectLineCircle(..) | IntersectCircleCircle(..) => {
                ObjKind::Point
            }
            IntersectCircleParabola { .. } => ObjKind::Point,
            LineThrough(..) | FoldO6 { .. } => ObjKind::Line,
            CircleCenterThrough(..) => ObjKind::Circle,
            ParabolaUnit { .. } => ObjKind::Parabola,
            OutputLength(..) => ObjKind::Output,
        }
    }

    /// Least tool tier that provides this step.
    pub fn tier(&self) -> Tier {
        match self {
            Instruction::FoldO6 { .. } => Tier::OrigamiNeusis,
            Instruction::ParabolaUnit { .. } | Instruction::IntersectCircleParabola { .. } => Tier::Conic,
            _ => Tier::RulerCompass,
        }
    }

    fn operands(&self) -> Vec<(usize, ObjKind)> {
        use Instruction::*;
        use ObjKind::*;
        match *self {
            Base(_) => vec![],
            LineThrough(a, b) | CircleCenterThrough(a, b) | OutputLength(a, b) => {
                vec![(a, Point), (b, Point)]
            }
            IntersectLineLine(a, b) => vec![(a, Line), (b, Line)],
            IntersectLineCircle(a, b, _) => vec![(a, Line), (b, Circle)],
            IntersectCircleCircle(a, b, _) => vec![(a, Circle), (b, Circle)],
            FoldO6 { p1, l1, p2, l2, .. } => vec![(p1, Point), (l1, Line), (p2, Point), (l2, Line)],
            ParabolaUnit { origin, toward } => vec![(origin, Point), (toward, Point)],
            IntersectCircleParabola { circle, parabola, .. } => {
                vec![(circle, Circle), (parabola, Parabola)]
            }
        }
    }
}

/// A straight-line construction whose last step is the output length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    instrs: Vec<Instruction>,
    tool_tier: Tier,
}

impl Program {
    /// Checks operand references, the single trailing output, and that every
    /// step is available at `tool_tier`.
    pub fn new(instrs: Vec<Instruction>, tool_tier: Tier) -> Result<Program, GeomError> {
        let bad = |k: usize, msg: String| Err(GeomError::Malformed { step: k, message: msg });
        if !matches!(instrs.last(), Some(Instruction::OutputLength(..))) {
            return bad(instrs.len(), "program must end with OUT".into());
        }
        for (k, ins) in instrs.iter().enumerate() {
            if ins.kind() == ObjKind::Output && k + 1 != instrs.len() {
                return bad(k, "OUT must be the last step".into());
            }
            if ins.tier() > tool_tier {
                return bad(k, format!("step needs {} tools", ins.tier()));
            }
            for (r, want) in ins.operands() {
                if r >= k {
                    return bad(k, format!("operand {r} is not an earlier step"));
                }
                if instrs[r].kind() != want {
                    return bad(k, format!("operand {r} is a {:?}, expected a {want:?}", instrs[r].kind()));
                }
            }
        }
        Ok(Program { instrs, tool_tier })
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instrs
    }

    pub fn tool_tier(&self) -> Tier {
        self.tool_tier
    }

    pub fn len(&self) -> usize {
        self.instrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instrs.is_empty()
    }

    pub fn count(&self, pred: impl Fn(&Instruction) -> bool) -> usize {
        self.instrs.iter().filter(|i| pred(i)).count()
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Instruction::*;
        match self {
            Base(BasePoint::Origin) => write!(f, "BASE O"),
            Base(BasePoint::Unit) => write!(f, "BASE U"),
            LineThrough(a, b) => write!(f, "LINE {a} {b}"),
            CircleCenterThrough(a, b) => write!(f, "CIRCLE {a} {b}"),
            IntersectLineLine(a, b) => write!(f, "LL {a} {b}"),
            IntersectLineCircle(a, b, p) => write!(f, "LC {a} {b} {}", p.token()),
            IntersectCircleCircle(a, b, p) => write!(f, "CC {a} {b} {}", p.token()),
            FoldO6 { p1, l1, p2, l2, index } => write!(f, "FOLD {p1} {l1} {p2} {l2} IDX {index}"),
            ParabolaUnit { origin, toward } => write!(f, "PARABOLA {origin} {toward}"),
            IntersectCircleParabola { circle, parabola, index } => {
                write!(f, "CP {circle} {parabola} IDX {index}")
            }
            OutputLength(a, b) => write!(f, "OUT {a} {b}"),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ins) in self.instrs.iter().enumerate() {
            writeln!(f, "{k}: {ins}")?;
        }
        Ok(())
    }
}

fn parse_line(line: &str, k: usize) -> Result<Instruction, String> {
    let (label, body) = line.split_once(':').ok_or("missing 'k:' label")?;
    if label.trim().parse::<usize>().ok() != Some(k) {
        return Err(format!("expected label {k}"));
    }
    let toks: Vec<&str> = body.split_whitespace().collect();
    let (op, args) = toks.split_first().ok_or("missing opcode")?;
    let id = |i: usize| -> Result<usize, String> {
        let t = args.get(i).ok_or(format!("{op}: missing operand {}", i + 1))?;
        t.parse().map_err(|_| format!("{op}: bad object id '{t}'"))
    };
    let pick = |i: usize| -> Result<Pick, String> {
        let t = args.get(i).ok_or(format!("{op}: missing pick"))?;
        Pick::from_token(t).ok_or(format!("{op}: bad pick '{t}'"))
    };
    let index = |i: usize| -> Result<usize, String> {
        if args.get(i) != Some(&"IDX") {
            return Err(format!("{op}: expected IDX"));
        }
        id(i + 1)
    };
    let arity = |n: usize| -> Result<(), String> {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("{op}: expected {n} arguments, found {}", args.len()))
        }
    };
    use Instruction::*;
    let ins = match *op {
        "BASE" => {
            arity(1)?;
            match args[0] {
                "O" => Base(BasePoint::Origin),
                "U" => Base(BasePoint::Unit),
                t => return Err(format!("BASE: expected O or U, found '{t}'")),
            }
        }
        "LINE" => {
            arity(2)?;
            LineThrough(id(0)?, id(1)?)
        }
        "CIRCLE" => {
            arity(2)?;
            CircleCenterThrough(id(0)?, id(1)?)
        }
        "LL" => {
            arity(2)?;
            IntersectLineLine(id(0)?, id(1)?)
        }
        "LC" => {
            arity(3)?;
            IntersectLineCircle(id(0)?, id(1)?, pick(2)?)
        }
        "CC" => {
            arity(3)?;
            IntersectCircleCircle(id(0)?, id(1)?, pick(2)?)
        }
        "FOLD" => {
            arity(6)?;
            FoldO6 { p1: id(0)?, l1: id(1)?, p2: id(2)?, l2: id(3)?, index: index(4)? }
        }
        "PARABOLA" => {
            arity(2)?;
            ParabolaUnit { origin: id(0)?, toward: id(1)? }
        }
        "CP" => {
            arity(4)?;
            IntersectCircleParabola { circle: id(0)?, parabola: id(1)?, index: index(2)? }
        }
        "OUT" => {
            arity(2)?;
            OutputLength(id(0)?, id(1)?)
        }
        other => return Err(format!("unknown opcode '{other}'")),
    };
    Ok(ins)
}

impl FromStr for Program {
    type Err = GeomError;

    /// Reads the line format; blank lines and `#` comments are skipped. The
    /// tool tier is the least tier covering every step.
    fn from_str(text: &str) -> Result<Program, GeomError> {
        let mut instrs = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let ins = parse_line(line, instrs.len())
                .map_err(|message| GeomError::Parse { line: n + 1, message })?;
            instrs.push(ins);
        }
        let tier = instrs.iter().map(Instruction::tier).max().unwrap_or(Tier::RulerCompass);
        Program::new(instrs, tier)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: &str = "\
0: BASE O
1: BASE U
2: CIRCLE 0 1   # unit circle
3: LINE 0 1
4: LC 3 2 LOX
5: OUT 4 1
";

    #[test]
    fn text_round_trip() {
        let p: Program = SQRT2.parse().unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.tool_tier(), Tier::RulerCompass);
        let again: Program = p.to_string().parse().unwrap();
        assert_eq!(again, p);
        assert!(p.to_string().contains("4: LC 3 2 LOX\n"));
    }

    #[test]
    fn tier_is_inferred() {
        let src = "0: BASE O\n1: BASE U\n2: PARABOLA 0 1\n3: OUT 0 1\n";
        assert_eq!(src.parse::<Program>().unwrap().tool_tier(), Tier::Conic);
    }

    #[test]
    fn rejects_bad_programs() {
        let err = |s: &str| s.parse::<Program>().unwrap_err();
        assert!(matches!(err("0: BASE O\n"), GeomError::Malformed { .. }));
        assert!(matches!(err("0: BASE O\n2: BASE U\n"), GeomError::Parse { line: 2, .. }));
        assert!(matches!(err("0: BASE O\n1: LINE 0 1\n2: OUT 0 0\n"), GeomError::Malformed { step: 1, .. }));
        assert!(matches!(err("0: BASE O\n1: LINE 0 0\n2: OUT 1 0\n"), GeomError::Malformed { step: 2, .. }));
        assert!(matches!(err("0: FROB 1\n"), GeomError::Parse { line: 1, .. }));
        assert!(matches!(err("0: BASE O\n1: OUT 0 0\n2: OUT 0 0\n"), GeomError::Malformed { step: 1, .. }));
        let fold = vec![
            Instruction::Base(BasePoint::Origin),
            Instruction::LineThrough(0, 0),
            Instruction::FoldO6 { p1: 0, l1: 1, p2: 0, l2: 1, index: 0 },
            Instruction::OutputLength(0, 0),
        ];
        assert!(Program::new(fold, Tier::RulerCompass).is_err());
    }
}
