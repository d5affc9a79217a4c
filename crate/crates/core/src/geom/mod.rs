//! Construction programs: a straight-line instruction set for ruler, compass,
//! folds and a unit parabola, compilers from expressions, and an interval
//! interpreter that checks a program's output against an exact value.

mod builder;
mod compile;
mod interp;
mod numeric;
mod program;
mod verify;

pub use compile::{compile_conic_cubic, trisect, Compiler, Conic, Origami, Registry, RulerCompass};
pub use interp::{interpret, Interpretation};
pub use program::{BasePoint, Instruction, ObjKind, Pick, Program};
pub use verify::{verify, Certificate, Verdict, VERIFY_WIDTH_LOG2};

use crate::algnum::NamedConstant;
use crate::expr::EvalError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("step {step}: {message}")]
    Malformed { step: usize, message: String },
    #[error("step {step}: degenerate intersection")]
    DegenerateIntersection { step: usize },
    #[error("step {step}: the two candidate points cannot be told apart")]
    AmbiguousPick { step: usize },
    #[error("step {step}: the objects do not meet")]
    NoIntersection { step: usize },
    #[error("step {step}: pick index {index} but only {count} solutions")]
    PickOutOfRange { step: usize, index: usize, count: usize },
    #[error("no certified result within {bits} bits of working precision")]
    PrecisionExhausted { bits: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error("{node} is outside the {tool} fragment")]
    OutsideFragment { tool: &'static str, node: String },
    #[error("{0} is not algebraic")]
    NotAlgebraic(NamedConstant),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Unconstructible(String),
    #[error("construction failed: {0}")]
    Geom(#[from] GeomError),
    #[error("unknown tool '{0}'")]
    UnknownTool(String),
}
