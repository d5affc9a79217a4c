//! Splitting-field degrees and the smoothness classes derived from them.

use super::field::NumberField;
use crate::poly::{factor_degrees_mod, factor_rational, primes_from, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};
use std::fmt;

pub const DEFAULT_CAP: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitDegree {
    Exact(u64),
    CapExceeded,
}

impl SplitDegree {
    pub fn exact(self) -> Option<u64> {
        match self {
            SplitDegree::Exact(d) => Some(d),
            SplitDegree::CapExceeded => None,
        }
    }
}

impl Serialize for SplitDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SplitDegree::Exact(d) => s.serialize_u64(*d),
            SplitDegree::CapExceeded => s.serialize_str("cap_exceeded"),
        }
    }
}

impl fmt::Display for SplitDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitDegree::Exact(d) => write!(f, "{d}"),
            SplitDegree::CapExceeded => write!(f, "cap exceeded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub degree: SplitDegree,
    /// Degree of the factor whose root was adjoined at each step.
    pub tower: Vec<usize>,
    pub shortcut: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Smoothness {
    TwoGroup,
    TwoThreeSmooth,
    NotSmooth,
    Unknown,
}

fn is_two_power(n: u64) -> bool {
    n.is_power_of_two()
}

fn is_two_three_smooth(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % 2 == 0 {
        n /= 2;
    }
    while n % 3 == 0 {
        n /= 3;
    }
    n == 1
}

impl Smoothness {
    pub fn of_degree(d: SplitDegree) -> Smoothness {
        match d {
            SplitDegree::CapExceeded => Smoothness::Unknown,
            SplitDegree::Exact(n) if is_two_power(n) => Smoothness::TwoGroup,
            SplitDegree::Exact(n) if is_two_three_smooth(n) => Smoothness::TwoThreeSmooth,
            SplitDegree::Exact(_) => Smoothness::NotSmooth,
        }
    }
}

/// Degree over the rationals of the splitting field of a squarefree `f`.
///
/// `CapExceeded` when the degree is larger than `cap`, and also when deciding
/// it would take a norm of degree above `2 * cap`.
pub fn splitting_degree(f: &IntPoly, cap: u64) -> SplittingReport {
    climb(f, cap, false)
}

/// Adjoins roots one factor at a time. With `stop_unsmooth`, returns as soon
/// as a step degree has a prime factor of 5 or more (the final degree is then
/// certainly not 2-3-smooth); the reported degree is the partial product.
fn climb(f: &IntPoly, cap: u64, stop_unsmooth: bool) -> SplittingReport {
    let f = f.normalized();
    let n = f.deg();
    assert!(n >= 1, "splitting degree of a constant");
    let mut tower = Vec::new();
    if (n as u64) > cap {
        return SplittingReport { degree: SplitDegree::CapExceeded, tower, shortcut: None };
    }
    let mut field = NumberField::rationals();
    let mut degree: u64 = 1;
    loop {
        if (n as u64) * degree > 2 * cap {
            // norms of this size are not attempted; the degree stays undecided
            return SplittingReport { degree: SplitDegree::CapExceeded, tower, shortcut: None };
        }
        let (_, norm) = field.squarefree_norm(&f);
        let factors = factor_rational(&norm).irreducibles();
        let d = field.degree();
        let nonlinear: Vec<&IntPoly> = factors.iter().filter(|g| g.deg() > d).collect();
        if nonlinear.is_empty() {
            return SplittingReport { degree: SplitDegree::Exact(degree), tower, shortcut: None };
        }
        if nonlinear.len() == 1 && nonlinear[0].deg() == 2 * d {
            // adjoining one root of the only quadratic brings in the other
            tower.push(2);
            let total = 2 * degree;
            if total > cap {
                return SplittingReport { degree: SplitDegree::CapExceeded, tower, shortcut: None };
            }
            return SplittingReport {
                degree: SplitDegree::Exact(total),
                tower,
                shortcut: Some("last_quadratic"),
            };
        }
        // adjoin a root of the smallest nonlinear factor; the matching norm
        // factor is the minimal polynomial of the combined primitive element
        let next = nonlinear.iter().min_by_key(|g| g.deg()).map(|g| (*g).clone()).unwrap_or_default();
        let step = next.deg() / d;
        tower.push(step);
        degree *= step as u64;
        if degree > cap {
            return SplittingReport { degree: SplitDegree::CapExceeded, tower, shortcut: None };
        }
        if stop_unsmooth && !is_two_three_smooth(step as u64) {
            return SplittingReport {
                degree: SplitDegree::Exact(degree),
                tower,
                shortcut: Some("unsmooth_step"),
            };
        }
        if 2 * degree > cap && !may_be_splitting_field(&next, &f) {
            // any further step would pass the cap
            return SplittingReport { degree: SplitDegree::CapExceeded, tower, shortcut: None };
        }
        field = NumberField::new_unchecked(next);
    }
}

/// Necessary condition for `Q(theta)`, `h(theta) = 0`, to be the splitting
/// field of `f`. At a prime where both stay squarefree, Frobenius has order
/// equal to the lcm of the factor degrees of `f`, and in a normal field every
/// factor of `h` has exactly that degree. `false` means some prime rules the
/// field out.
fn may_be_splitting_field(h: &IntPoly, f: &IntPoly) -> bool {
    if h.deg() <= 1 {
        return f.deg() <= 1;
    }
    let mut tested = 0;
    for p in primes_from(3).take(200) {
        let (Some(hd), Some(fd)) = (factor_degrees_mod(h, p), factor_degrees_mod(f, p)) else {
            continue;
        };
        let order = fd.iter().fold(1, |acc, &d| num_integer::lcm(acc, d));
        if hd.iter().any(|&d| d != order) {
            return false;
        }
        tested += 1;
        if tested == 12 {
            break;
        }
    }
    true
}

/// Monic rational coefficients `[a0, a1, a2, a3]` of a quartic.
fn monic_quartic(f: &IntPoly) -> [BigRational; 4] {
    let lc = BigRational::from_integer(f.leading_coeff());
    std::array::from_fn(|i| BigRational::from_integer(f.coeff(i)) / &lc)
}

/// Whether the Galois closure of an irreducible quartic has 2-power degree,
/// via reducibility of its resolvent cubic.
pub fn quartic_is_two_group(f: &IntPoly) -> bool {
    assert_eq!(f.deg(), 4, "quartic expected");
    let [d, c, b, a] = monic_quartic(f);
    // y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2)
    let four = BigRational::from_integer(BigInt::from(4));
    let coeffs = [
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -b.clone(),
        BigRational::from_integer(1.into()),
    ];
    let cubic = super::qpoly::QPoly::new(coeffs.to_vec()).to_int_poly();
    factor_rational(&cubic)
        .factors
        .iter()
        .any(|(g, _)| g.deg() == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub verdict: Smoothness,
    /// Present when the tower had to be climbed. After an `unsmooth_step`
    /// stop its degree is only the partial product so far.
    pub splitting: Option<SplittingReport>,
    pub shortcut: Option<&'static str>,
}

/// Smoothness class of the splitting field of an irreducible `f`.
pub fn smoothness_verdict(f: &IntPoly, cap: u64) -> Smoothness {
    smoothness_report(f, cap).verdict
}

/// [`smoothness_verdict`] together with how it was decided.
pub fn smoothness_report(f: &IntPoly, cap: u64) -> SmoothnessReport {
    let n = f.deg() as u64;
    let short = |verdict, name| SmoothnessReport { verdict, splitting: None, shortcut: Some(name) };
    if !is_two_three_smooth(n) {
        return short(Smoothness::NotSmooth, "degree_has_prime_above_3");
    }
    match n {
        1 | 2 => return short(Smoothness::TwoGroup, "degree_at_most_2"),
        3 => return short(Smoothness::TwoThreeSmooth, "cubic"),
        4 => {
            let v = if quartic_is_two_group(f) {
                Smoothness::TwoGroup
            } else {
                Smoothness::TwoThreeSmooth
            };
            return short(v, "quartic_resolvent");
        }
        _ => {}
    }
    let report = climb(f, cap, true);
    let verdict = if report.shortcut == Some("unsmooth_step") {
        Smoothness::NotSmooth
    } else {
        Smoothness::of_degree(report.degree)
    };
    SmoothnessReport { verdict, splitting: Some(report), shortcut: None }
}
