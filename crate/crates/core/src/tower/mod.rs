//! Number-field towers: factoring over simple extensions and computing the
//! degree of a splitting field.

mod field;
mod qpoly;
mod splitting;

pub use field::{Embedding, FieldElement, FieldError, KPoly, NumberField};
pub use qpoly::QPoly;
pub use splitting::{
    quartic_is_two_group, smoothness_report, smoothness_verdict, splitting_degree, Smoothness, SmoothnessReport, SplitDegree,
    SplittingReport, DEFAULT_CAP,
};

/// Irreducible monic factors of a rationally squarefree `f` over `k`.
pub fn factor_over_field(f: &crate::poly::IntPoly, k: &NumberField) -> Vec<KPoly> {
    k.factor(f)
}
