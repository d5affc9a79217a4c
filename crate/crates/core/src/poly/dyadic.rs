use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact dyadic rational `mantissa * 2^exponent`.
///
/// Kept canonical: the mantissa is odd, or zero with exponent 0, so derived
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0) as i64;
        Dyadic {
            mant: mant >> tz,
            exp: exp + tz,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::new(v.into(), 0)
    }

    /// `2^e`
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: e,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        self.mant.cmp(&BigInt::zero())
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub(crate) fn to_bigint_exact(&self) -> BigInt {
        debug_assert!(self.exp >= 0);
        &self.mant << self.exp as usize
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn half(&self) -> Self {
        Self::new(self.mant.clone(), self.exp - 1)
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        (self + other).half()
    }

    /// Value scaled by `2^prec` as an exact rational `num/den` with `den = 2^s`.
    fn scaled(&self, prec: i64) -> (BigInt, usize) {
        let e = self.exp + prec;
        if e >= 0 {
            (&self.mant << e as usize, 0)
        } else {
            (self.mant.clone(), (-e) as usize)
        }
    }

    /// Largest multiple of `2^-prec` not above `self`.
    pub fn floor_to(&self, prec: i64) -> Self {
        let (n, s) = self.scaled(prec);
        Self::new(floor_shift(&n, s), -prec)
    }

    /// Smallest multiple of `2^-prec` not below `self`.
    pub fn ceil_to(&self, prec: i64) -> Self {
        let (n, s) = self.scaled(prec);
        Self::new(ceil_shift(&n, s), -prec)
    }

    pub fn floor_rational(r: &BigRational, prec: i64) -> Self {
        let (n, d) = scale_rational(r, prec);
        Self::new(n.div_floor(&d), -prec)
    }

    pub fn ceil_rational(r: &BigRational, prec: i64) -> Self {
        let (n, d) = scale_rational(r, prec);
        Self::new(-((-n).div_floor(&d)), -prec)
    }

    /// `self / other` rounded down (`up == false`) or up to a multiple of `2^-prec`.
    pub fn div_round(&self, other: &Self, prec: i64, up: bool) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        let q = self.to_rational() / other.to_rational();
        if up {
            Self::ceil_rational(&q, prec)
        } else {
            Self::floor_rational(&q, prec)
        }
    }

    /// Square root of a nonnegative dyadic rounded down or up to `2^-prec`.
    pub fn sqrt_round(&self, prec: i64, up: bool) -> Self {
        assert!(self.signum() != Ordering::Less, "square root of negative dyadic");
        // sqrt(v) * 2^prec = sqrt(v * 2^(2 prec))
        let (n, s) = self.scaled(2 * prec);
        let v = if up { ceil_shift(&n, s) } else { floor_shift(&n, s) };
        let r = v.sqrt();
        let r = if up && &r * &r < v { r + 1 } else { r };
        Self::new(r, -prec)
    }

    /// Number of bits needed to bound `|self|` from above: smallest `b` with `|self| <= 2^b`.
    pub fn magnitude_log2(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN / 4;
        }
        let bits = self.mant.abs().bits() as i64;
        // |mant| <= 2^bits, and for odd mantissa > 1 strictly less
        if self.mant.abs().is_one() {
            self.exp
        } else {
            self.exp + bits
        }
    }

    /// Floor of the value as an integer.
    pub fn floor_int(&self) -> BigInt {
        let (n, s) = self.scaled(0);
        floor_shift(&n, s)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mant >> shift as usize).to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi((self.exp + shift) as i32)
    }
}

fn scale_rational(r: &BigRational, prec: i64) -> (BigInt, BigInt) {
    if prec >= 0 {
        (r.numer() << prec as usize, r.denom().clone())
    } else {
        (r.numer().clone(), r.denom() << (-prec) as usize)
    }
}

fn floor_shift(n: &BigInt, s: usize) -> BigInt {
    if s == 0 {
        n.clone()
    } else {
        n.div_floor(&(BigInt::one() << s))
    }
}

fn ceil_shift(n: &BigInt, s: usize) -> BigInt {
    -floor_shift(&-n, s)
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &rhs.mant << (rhs.exp - e) as usize;
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mant << self.exp as usize)
        } else {
            write!(f, "{}/2^{}", self.mant, -self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints.
///
/// The arithmetic here rounds outward so the result always encloses every
/// value obtainable from points of the operands; `prec` is an absolute
/// precision in bits after the binary point.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct DyadicInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        DyadicInterval { lo, hi }
    }

    pub fn point(v: Dyadic) -> Self {
        DyadicInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    /// Tightest enclosure of `r` with endpoints on the grid `2^-prec`.
    pub fn from_rational(r: &BigRational, prec: i64) -> Self {
        DyadicInterval {
            lo: Dyadic::floor_rational(r, prec),
            hi: Dyadic::ceil_rational(r, prec),
        }
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() != Ordering::Greater && self.hi.signum() != Ordering::Less
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// `Less`/`Greater` when the whole interval is strictly negative/positive.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.signum() == Ordering::Greater {
            Some(Ordering::Greater)
        } else if self.hi.signum() == Ordering::Less {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn round_out(&self, prec: i64) -> Self {
        DyadicInterval {
            lo: self.lo.floor_to(prec),
            hi: self.hi.ceil_to(prec),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        DyadicInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        DyadicInterval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn neg(&self) -> Self {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().cloned().unwrap_or_else(Dyadic::zero);
        let hi = c.iter().max().cloned().unwrap_or_else(Dyadic::zero);
        DyadicInterval { lo, hi }
    }

    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            DyadicInterval {
                lo: Dyadic::zero(),
                hi: a.max(b),
            }
        } else {
            DyadicInterval {
                lo: a.clone().min(b.clone()),
                hi: a.max(b),
            }
        }
    }

    /// `1/self`, or `None` when the interval touches zero.
    pub fn recip(&self, prec: i64) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let one = Dyadic::from_int(1);
        Some(DyadicInterval {
            lo: one.div_round(&self.hi, prec, false),
            hi: one.div_round(&self.lo, prec, true),
        })
    }

    pub fn div(&self, o: &Self, prec: i64) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let c = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let lo = c
            .iter()
            .map(|(a, b)| a.div_round(b, prec, false))
            .min()
            .unwrap_or_else(Dyadic::zero);
        let hi = c
            .iter()
            .map(|(a, b)| a.div_round(b, prec, true))
            .max()
            .unwrap_or_else(Dyadic::zero);
        Some(DyadicInterval { lo, hi })
    }

    /// Square root; `None` if the interval is entirely negative. A slightly
    /// negative lower end is clamped to zero.
    pub fn sqrt(&self, prec: i64) -> Option<Self> {
        if self.hi.signum() == Ordering::Less {
            return None;
        }
        let lo = if self.lo.signum() == Ordering::Less {
            Dyadic::zero()
        } else {
            self.lo.sqrt_round(prec, false)
        };
        Some(DyadicInterval {
            lo,
            hi: self.hi.sqrt_round(prec, true),
        })
    }

    /// Enclosure of the real k-th root, with `k` odd allowing negative input.
    pub fn nth_root(&self, k: u32, prec: i64) -> Option<Self> {
        if k % 2 == 0 && self.hi.signum() == Ordering::Less {
            return None;
        }
        let root = |v: &Dyadic, up: bool| -> Dyadic {
            if v.signum() == Ordering::Less {
                if k % 2 == 0 {
                    return Dyadic::zero();
                }
                return -nth_root_round(&v.abs(), k, prec, !up);
            }
            nth_root_round(v, k, prec, up)
        };
        Some(DyadicInterval {
            lo: root(&self.lo, false),
            hi: root(&self.hi, true),
        })
    }

    /// Interval hull.
    pub fn hull(&self, o: &Self) -> Self {
        DyadicInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn max_abs(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }
}

fn nth_root_round(v: &Dyadic, k: u32, prec: i64, up: bool) -> Dyadic {
    let (n, s) = v.scaled(k as i64 * prec);
    let w = if up { ceil_shift(&n, s) } else { floor_shift(&n, s) };
    let r = w.nth_root(k);
    let r = if up && num_traits::pow(r.clone(), k as usize) < w {
        r + 1
    } else {
        r
    };
    Dyadic::new(r, -prec)
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
