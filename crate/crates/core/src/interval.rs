//! Certified interval arithmetic.
//!
//! Two carriers share one contract ([`CertInterval`]): a fast `f64` interval
//! ([`Interval`]) that widens every computed endpoint outward by one ulp, and
//! an exact rational interval ([`RatInterval`]) used as the automatic
//! high-precision retry when a sign test is too close to call at `f64` width.
//!
//! The `f64` model needs no rounding-mode control: IEEE-754 primitives
//! (`+ - * /` and `sqrt`) are correctly rounded, so the exact result of an
//! endpoint computation lies within one ulp of the computed value. Nudging
//! each computed endpoint one ulp outward therefore yields a true enclosure,
//! and enclosures compose inductively through whole expressions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Three-way outcome of testing an interval-valued margin against zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignTest {
    /// The whole interval satisfies the requested relation with zero.
    Satisfied,
    /// The whole interval violates it.
    Violated,
    /// The interval straddles the threshold; the carrier cannot decide.
    Undecided,
}

/// Shared contract for the two interval carriers, so an inequality can be
/// written once and evaluated at either precision.
pub trait CertInterval:
    Sized
    + Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_int(v: i64) -> Self;
    /// Exact embedding of a finite f64 (every f64 is a rational).
    fn from_f64_exact(v: f64) -> Self;
    /// Enclosure of the square root. The argument must be nonnegative.
    fn sqrt(&self) -> Self;
    fn lo_f64(&self) -> f64;
    fn hi_f64(&self) -> f64;
    /// Tests `self > 0` (strict) or `self >= 0` (non-strict) using the
    /// carrier's own endpoint comparisons.
    fn test_positive(&self, strict: bool) -> SignTest;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

/// Closed `f64` interval `[lo, hi]` with outward 1-ulp widening after every
/// primitive operation. Endpoints are always finite and ordered.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo.is_finite() && hi.is_finite() && lo <= hi, "bad interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Degenerate interval holding an exactly representable value.
    pub fn point(x: f64) -> Self {
        debug_assert!(x.is_finite());
        Interval { lo: x, hi: x }
    }

    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// True when `self` encloses every point of `other`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    fn widened(lo: f64, hi: f64) -> Self {
        Interval::new(lo.next_down(), hi.next_up())
    }

    /// Smallest interval covering both arguments.
    pub fn hull(&self, other: &Interval) -> Self {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Interval", 2)?;
        st.serialize_field("lo", &self.lo)?;
        st.serialize_field("hi", &self.hi)?;
        st.end()
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi, -self.lo) // exact: negation introduces no rounding
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::widened(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::widened(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Interval::widened(lo, hi)
    }
}

impl Div for Interval {
    type Output = Interval;
    /// The divisor must not straddle zero; callers validate denominators.
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "interval division by {o}");
        let c = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Interval::widened(lo, hi)
    }
}

impl CertInterval for Interval {
    fn from_int(v: i64) -> Self {
        let x = v as f64;
        if x as i128 == v as i128 && x.abs() < 9.1e15 {
            Interval::point(x)
        } else {
            Interval::widened(x, x)
        }
    }

    fn from_f64_exact(v: f64) -> Self {
        assert!(v.is_finite(), "cannot embed {v} in an interval");
        Interval::point(v)
    }

    fn sqrt(&self) -> Self {
        assert!(self.lo >= 0.0, "sqrt of interval reaching below zero: {self}");
        let lo = self.lo.sqrt().next_down().max(0.0);
        Interval::new(lo, self.hi.sqrt().next_up())
    }

    fn lo_f64(&self) -> f64 {
        self.lo
    }

    fn hi_f64(&self) -> f64 {
        self.hi
    }

    fn test_positive(&self, strict: bool) -> SignTest {
        if strict {
            if self.lo > 0.0 {
                SignTest::Satisfied
            } else if self.hi <= 0.0 {
                SignTest::Violated
            } else {
                SignTest::Undecided
            }
        } else if self.lo >= 0.0 {
            SignTest::Satisfied
        } else if self.hi < 0.0 {
            SignTest::Violated
        } else {
            SignTest::Undecided
        }
    }
}

/// Number of fractional bits kept when rounding rational square-root
/// enclosures. Newton iteration from an `f64` seed converges far past this;
/// the cap keeps denominators from squaring without bound.
const SQRT_BITS: u32 = 192;

/// Exact rational interval. All field operations are exact; only square
/// roots introduce width, and that width is certified by integer
/// comparisons (`hi^2 >= x` and `lo = x / hi`), never by float reasoning.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn exact(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// Outward-rounded `f64` enclosure of this rational interval.
    pub fn to_interval(&self) -> Interval {
        let lo = self.lo.to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi.to_f64().unwrap_or(f64::INFINITY);
        // `to_f64` rounds to nearest; one ulp outward restores the enclosure.
        Interval::new(lo.next_down(), hi.next_up())
    }
}

/// Rounds `r` down (toward negative infinity) to a multiple of 2^-bits.
fn floor_to_bits(r: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (r * BigRational::from_integer(scale.clone())).floor();
    scaled / BigRational::from_integer(scale)
}

/// Rounds `r` up (toward positive infinity) to a multiple of 2^-bits.
fn ceil_to_bits(r: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (r * BigRational::from_integer(scale.clone())).ceil();
    scaled / BigRational::from_integer(scale)
}

/// Certified enclosure of the square root of a nonnegative rational.
///
/// Newton iteration from above: for any `r > 0`, `(r + x/r)/2 >= sqrt(x)`,
/// so every iterate after the first is an upper bound; rounding iterates
/// *up* preserves that. The lower end is `x / hi`, exact division, which is
/// `<= sqrt(x)` whenever `hi >= sqrt(x)`. Both claims are re-verified by
/// exact comparisons before returning.
pub fn sqrt_enclosure(x: &BigRational) -> RatInterval {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return RatInterval::exact(BigRational::zero());
    }
    // exact point when x is the square of a rational; equality claims
    // (like the one closing the n = 12 case) depend on this path
    let rn = x.numer().sqrt();
    let rd = x.denom().sqrt();
    if &(&rn * &rn) == x.numer() && &(&rd * &rd) == x.denom() {
        return RatInterval::exact(BigRational::new(rn, rd));
    }
    let seed = x.to_f64().map(f64::sqrt).filter(|s| s.is_finite() && *s > 0.0);
    let mut r = match seed.and_then(BigRational::from_float) {
        Some(s) if s.is_positive() => s,
        _ => x.clone() + BigRational::one(),
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..4 {
        r = (&r + x / &r) * &half;
        r = ceil_to_bits(&r, SQRT_BITS);
    }
    assert!(&r * &r >= *x, "sqrt upper endpoint lost its certificate");
    let lo = floor_to_bits(&(x / &r), SQRT_BITS).max(BigRational::zero());
    assert!(&lo * &lo <= *x);
    RatInterval::new(lo, r)
}

impl Neg for RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval::new(-self.hi, -self.lo)
    }
}

impl Add for RatInterval {
    type Output = RatInterval;
    fn add(self, o: RatInterval) -> RatInterval {
        RatInterval::new(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for RatInterval {
    type Output = RatInterval;
    fn sub(self, o: RatInterval) -> RatInterval {
        RatInterval::new(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Mul for RatInterval {
    type Output = RatInterval;
    fn mul(self, o: RatInterval) -> RatInterval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }
}

impl Div for RatInterval {
    type Output = RatInterval;
    fn div(self, o: RatInterval) -> RatInterval {
        assert!(
            o.lo.is_positive() || o.hi.is_negative(),
            "rational interval division by an interval containing zero"
        );
        let c = [
            &self.lo / &o.lo,
            &self.lo / &o.hi,
            &self.hi / &o.lo,
            &self.hi / &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }
}

impl CertInterval for RatInterval {
    fn from_int(v: i64) -> Self {
        RatInterval::exact(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_f64_exact(v: f64) -> Self {
        let r = BigRational::from_float(v)
            .unwrap_or_else(|| panic!("cannot embed {v} in an interval"));
        RatInterval::exact(r)
    }

    fn sqrt(&self) -> Self {
        let lo = sqrt_enclosure(&self.lo);
        let hi = sqrt_enclosure(&self.hi);
        RatInterval::new(lo.lo, hi.hi)
    }

    fn lo_f64(&self) -> f64 {
        self.to_interval().lo()
    }

    fn hi_f64(&self) -> f64 {
        self.to_interval().hi()
    }

    fn test_positive(&self, strict: bool) -> SignTest {
        if strict {
            if self.lo.is_positive() {
                SignTest::Satisfied
            } else if !self.hi.is_positive() {
                SignTest::Violated
            } else {
                SignTest::Undecided
            }
        } else if !self.lo.is_negative() {
            SignTest::Satisfied
        } else if self.hi.is_negative() {
            SignTest::Violated
        } else {
            SignTest::Undecided
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn point_arithmetic_encloses_exact_results() {
        let a = Interval::from_int(1);
        let b = Interval::from_int(3);
        let third = a / b;
        assert!(third.contains(1.0 / 3.0));
        assert!(third.width() < 1e-15);
        let back = third * b;
        assert!(back.contains(1.0));
    }

    #[test]
    fn sqrt_of_square_contains_root() {
        let four = Interval::from_int(4);
        let two = four.sqrt();
        assert!(two.contains(2.0));
        assert!(two.width() < 1e-14);
        // irrational case: enclosure straddles the true value
        let s = Interval::from_int(2).sqrt();
        assert!(s.lo() < std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 < s.hi());
    }

    #[test]
    fn from_int_widens_beyond_53_bits() {
        let big = (1i64 << 60) + 1;
        let iv = Interval::from_int(big);
        assert!(iv.lo() <= big as f64 && big as f64 <= iv.hi());
        assert!(iv.width() > 0.0);
        let exact = Interval::from_int(1 << 52);
        assert_eq!(exact.width(), 0.0);
    }

    #[test]
    fn subtraction_flips_endpoints() {
        let a = Interval::new(1.0, 2.0);
        let b = Interval::new(0.5, 0.75);
        let d = a - b;
        assert!(d.lo() <= 0.25 && d.hi() >= 1.5);
    }

    #[test]
    #[should_panic(expected = "interval division")]
    fn division_by_zero_straddling_interval_panics() {
        let _ = Interval::from_int(1) / Interval::new(-1.0, 1.0);
    }

    #[test]
    fn rational_sqrt_enclosure_is_certified_and_tight() {
        let x = rat(2, 1);
        let e = sqrt_enclosure(&x);
        assert!(e.lo() * e.lo() <= x && x <= e.hi() * e.hi());
        let width = (e.hi() - e.lo()).to_f64().unwrap();
        assert!(width < 1e-50, "width {width}");
        // rational squares come back as exact points
        let nine = sqrt_enclosure(&rat(9, 1));
        assert!(*nine.lo() == rat(3, 1) && *nine.hi() == rat(3, 1));
        let frac = sqrt_enclosure(&rat(4, 9));
        assert!(*frac.lo() == rat(2, 3) && *frac.hi() == rat(2, 3));
        let big = sqrt_enclosure(&rat(121, 1));
        assert!(*big.lo() == rat(11, 1) && *big.hi() == rat(11, 1));
    }

    #[test]
    fn rational_interval_reproduces_exact_fraction() {
        // (22 * 11) / 66 == 11/3 exactly
        let v = (RatInterval::from_int(22) * RatInterval::from_int(11))
            / RatInterval::from_int(66);
        assert_eq!(*v.lo(), rat(11, 3));
        assert_eq!(*v.hi(), rat(11, 3));
    }

    #[test]
    fn sign_tests_three_ways() {
        assert_eq!(Interval::new(0.5, 1.0).test_positive(true), SignTest::Satisfied);
        assert_eq!(Interval::new(-1.0, -0.5).test_positive(true), SignTest::Violated);
        assert_eq!(Interval::new(-0.1, 0.1).test_positive(true), SignTest::Undecided);
        assert_eq!(Interval::ZERO.test_positive(false), SignTest::Satisfied);
        assert_eq!(Interval::ZERO.test_positive(true), SignTest::Violated);
        let z = RatInterval::exact(BigRational::zero());
        assert_eq!(z.test_positive(true), SignTest::Violated);
        assert_eq!(z.test_positive(false), SignTest::Satisfied);
    }

    #[test]
    fn generic_expression_agrees_across_carriers() {
        fn expr<I: CertInterval>() -> I {
            // 23/sqrt(32) - sqrt(14), a fragment with both kinds of terms
            I::from_int(23) / I::from_int(32).sqrt() - I::from_int(14).sqrt()
        }
        let fast: Interval = expr();
        let exact: RatInterval = expr();
        let tight = exact.to_interval();
        assert!(fast.lo() <= tight.lo() && tight.hi() <= fast.hi());
        assert!(tight.width() < fast.width().max(1e-300));
    }
}
