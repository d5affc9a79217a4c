use super::{interpret, GeomError, Program};
use crate::algnum::AlgebraicNumber;
use crate::poly::{Dyadic, DyadicInterval};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Verified,
    Refuted,
}

/// The intervals that decided a verdict: for `Verified` the output lies
/// inside the target window, for `Refuted` the two are disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub output: DyadicInterval,
    pub target: DyadicInterval,
}

/// Largest output width accepted on the first round.
pub const VERIFY_WIDTH_LOG2: i64 = -128;

/// Compares the program's output with `target`. The output is computed to
/// width `w = min(2^-128, isolation width / 4)` and must land in the target's
/// enclosure widened by `4w` (clipped to its isolating interval); disjoint
/// intervals refute. Otherwise both are refined and the test repeats.
pub fn verify(p: &Program, target: &AlgebraicNumber) -> Result<Certificate, GeomError> {
    let iso = target.isolating_interval().clone();
    let mut w = Dyadic::pow2(VERIFY_WIDTH_LOG2);
    if !target.is_rational() {
        let quarter = iso.width().half().half();
        if quarter < w {
            w = quarter;
        }
    }
    loop {
        let out = interpret(p, &w)?.output;
        let margin = &(&w + &w) + &(&w + &w);
        let t = target.refine(&w);
        let mut window = DyadicInterval::new(&t.lo - &margin, &t.hi + &margin);
        if !target.is_rational() {
            window = DyadicInterval::new(window.lo.max(iso.lo.clone()), window.hi.min(iso.hi.clone()));
        }
        if out.is_subset_of(&window) {
            return Ok(Certificate { verdict: Verdict::Verified, output: out, target: window });
        }
        if out.is_disjoint_from(&t) {
            return Ok(Certificate { verdict: Verdict::Refuted, output: out, target: t });
        }
        w = Dyadic::new(w.mantissa().clone(), w.exponent() - 32);
    }
}
