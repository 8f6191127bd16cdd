//! Closed real intervals with outward-rounded binary64 endpoints.
//!
//! Every operation computes its endpoints in round-to-nearest and recovers
//! the rounding error with an error-free transformation (TwoSum or fma). An
//! endpoint moves one ulp outward only when the rounded value lies on the
//! wrong side of the exact one, so exact operations stay exact. Near the
//! underflow range, where fma residuals stop being exact, endpoints are
//! moved outward unconditionally.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    if x.is_finite() {
        x.next_down()
    } else {
        x
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x.is_finite() {
        x.next_up()
    } else {
        x
    }
}

const TINY: f64 = 1e-280;

/// Exact error of `a + b` (TwoSum).
fn sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

/// Rounded value `r` adjusted so the result is `<= exact` (`up = false`) or
/// `>= exact` (`up = true`), where `err` has the sign of `exact - r`.
fn settle(r: f64, err: f64, up_dir: bool) -> f64 {
    if !r.is_finite() {
        r
    } else if up_dir && err > 0.0 {
        r.next_up()
    } else if !up_dir && err < 0.0 {
        r.next_down()
    } else {
        r
    }
}

fn add_dir(a: f64, b: f64, up_dir: bool) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return s;
    }
    settle(s, sum_err(a, b, s), up_dir)
}

fn mul_dir(a: f64, b: f64, up_dir: bool) -> f64 {
    let p = a * b;
    if a == 0.0 || b == 0.0 {
        return p;
    }
    if p.abs() < TINY {
        return if up_dir { up(p) } else { down(p) };
    }
    settle(p, a.mul_add(b, -p), up_dir)
}

fn div_dir(a: f64, b: f64, up_dir: bool) -> f64 {
    let q = a / b;
    if a == 0.0 {
        return q;
    }
    if q.abs() < TINY || a.abs() < TINY {
        return if up_dir { up(q) } else { down(q) };
    }
    // a - q b, exact; exact quotient minus q has the sign of r / b
    let r = (-q).mul_add(b, a);
    settle(q, r * b.signum(), up_dir)
}

fn sqrt_dir(x: f64, up_dir: bool) -> f64 {
    let s = x.sqrt();
    if x < TINY {
        return if up_dir { up(s) } else { down(s).max(0.0) };
    }
    settle(s, (-s).mul_add(s, x), up_dir)
}

/// Distance to the next representable number above `|x|`.
fn ulp(x: f64) -> f64 {
    let a = x.abs();
    a.next_up() - a
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Panics if `lo > hi` or either endpoint is NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "invalid interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Degenerate interval `[x, x]`; exact because `x` is representable.
    pub const fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Smallest interval containing both endpoints in either order.
    pub fn spanning(a: f64, b: f64) -> Self {
        Interval { lo: a.min(b), hi: a.max(b) }
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hull(self, other: Interval) -> Self {
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    /// Every point is strictly positive.
    pub fn is_positive(self) -> bool {
        self.lo > 0.0
    }

    /// Every point is strictly negative.
    pub fn is_negative(self) -> bool {
        self.hi < 0.0
    }

    pub fn is_nonnegative(self) -> bool {
        self.lo >= 0.0
    }

    pub fn contains_zero(self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    pub fn sqr(self) -> Self {
        if self.lo >= 0.0 {
            Interval { lo: mul_dir(self.lo, self.lo, false), hi: mul_dir(self.hi, self.hi, true) }
        } else if self.hi <= 0.0 {
            Interval { lo: mul_dir(self.hi, self.hi, false), hi: mul_dir(self.lo, self.lo, true) }
        } else {
            let m = self.lo.abs().max(self.hi.abs());
            Interval { lo: 0.0, hi: mul_dir(m, m, true) }
        }
    }

    /// Square root of the nonnegative part; panics when the interval is
    /// entirely negative.
    pub fn sqrt(self) -> Self {
        assert!(self.hi >= 0.0, "sqrt of negative interval {self}");
        let lo = if self.lo <= 0.0 { 0.0 } else { sqrt_dir(self.lo, false) };
        Interval { lo, hi: sqrt_dir(self.hi, true) }
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval { lo: 0.0, hi: self.hi.max(-self.lo) }
        }
    }

    pub fn scale(self, k: f64) -> Self {
        self * Interval::point(k)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval { lo: add_dir(self.lo, rhs.lo, false), hi: add_dir(self.hi, rhs.hi, true) }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval { lo: add_dir(self.lo, -rhs.hi, false), hi: add_dir(self.hi, -rhs.lo, true) }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let pairs = [(self.lo, rhs.lo), (self.lo, rhs.hi), (self.hi, rhs.lo), (self.hi, rhs.hi)];
        let lo = pairs.iter().map(|&(a, b)| mul_dir(a, b, false)).fold(f64::INFINITY, f64::min);
        let hi = pairs.iter().map(|&(a, b)| mul_dir(a, b, true)).fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }
}

impl Div for Interval {
    type Output = Interval;
    /// Panics when the divisor contains zero.
    fn div(self, rhs: Interval) -> Interval {
        assert!(!rhs.contains_zero(), "division by interval containing zero: {rhs}");
        let pairs = [(self.lo, rhs.lo), (self.lo, rhs.hi), (self.hi, rhs.lo), (self.hi, rhs.hi)];
        let lo = pairs.iter().map(|&(a, b)| div_dir(a, b, false)).fold(f64::INFINITY, f64::min);
        let hi = pairs.iter().map(|&(a, b)| div_dir(a, b, true)).fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for Interval {
            type Output = Interval;
            fn $m(self, rhs: f64) -> Interval {
                $tr::$m(self, Interval::point(rhs))
            }
        }
        impl $tr<Interval> for f64 {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                $tr::$m(Interval::point(self), rhs)
            }
        }
    )*};
}

scalar_ops!(Add add, Sub sub, Mul mul, Div div);

/// Arithmetic shared by plain binary64 and interval evaluation, so kernels
/// such as recurrences and Horner schemes are written once.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn lift(x: f64) -> Self;
    fn zero() -> Self {
        Self::lift(0.0)
    }
    fn one() -> Self {
        Self::lift(1.0)
    }
    fn is_exact_zero(&self) -> bool;
}

impl Scalar for f64 {
    fn lift(x: f64) -> Self {
        x
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for Interval {
    fn lift(x: f64) -> Self {
        Interval::point(x)
    }
    fn is_exact_zero(&self) -> bool {
        self.lo == 0.0 && self.hi == 0.0
    }
}

/// Enclosure of `cos(num * pi / den)`.
///
/// The float angle differs from the exact one by a bounded `dtheta`, which
/// moves the cosine by at most `|sin(theta)| * |dtheta|`; the libm result is
/// trusted to within one ulp.
/// The value is stepped outward ulp by ulp until that sum is covered, so the
/// enclosure is at most 4 ulp wide for the angles used here.
pub fn cos_pi_ratio(num: u64, den: u64) -> Interval {
    trig_enclosure(num, den, f64::cos, f64::sin)
}

/// Enclosure of `sin(num * pi / den)`; see [`cos_pi_ratio`].
pub fn sin_pi_ratio(num: u64, den: u64) -> Interval {
    trig_enclosure(num, den, f64::sin, f64::cos)
}

fn trig_enclosure(num: u64, den: u64, f: fn(f64) -> f64, df: fn(f64) -> f64) -> Interval {
    assert!(den > 0, "zero denominator");
    let prod = num as f64 * PI;
    let prod_err = (num as f64).mul_add(PI, -prod).abs();
    let theta = prod / den as f64;
    let value = f(theta);
    // |PI - pi| < 1.2246468e-16, the product error is measured exactly with
    // an fma, and the quotient contributes at most half an ulp of theta.
    let dtheta = 1.2246468e-16 * num as f64 / den as f64 * (1.0 + 1e-10)
        + prod_err / den as f64
        + 0.5 * ulp(theta)
        + f64::MIN_POSITIVE;
    // bound on |f'| over [theta - dtheta, theta + dtheta]
    let slope = (df(theta).abs() + dtheta).min(1.0);
    let half = slope * dtheta + ulp(value);
    if half > 8.0 * ulp(value) {
        // value near zero: its spacing is far below the angle error
        return Interval { lo: down(value - half), hi: up(value + half) };
    }
    // value - lo and hi - value are exact here (Sterbenz)
    let mut lo = value.next_down();
    while value - lo < half {
        lo = lo.next_down();
    }
    let mut hi = value.next_up();
    while hi - value < half {
        hi = hi.next_up();
    }
    Interval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_operations_stay_points() {
        let p = |x: f64| Interval::point(x);
        assert_eq!(p(3.0) + p(4.0), p(7.0));
        assert_eq!(p(3.0) * p(-4.0), p(-12.0));
        assert_eq!(p(1.0) / p(4.0), p(0.25));
        assert_eq!(p(0.0) - p(0.0), p(0.0));
        assert_eq!(p(9.0).sqrt(), p(3.0));
        assert_eq!(p(-3.0).sqr(), p(9.0));
    }

    #[test]
    fn inexact_operations_widen_by_one_ulp() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..2000 {
            let a: f64 = rng.gen_range(-1e3..1e3);
            let b: f64 = rng.gen_range(-1e3..1e3);
            let (x, y) = (Interval::point(a), Interval::point(b));
            let prod = x * y;
            let exact = a.mul_add(b, -(a * b)) == 0.0;
            assert_eq!(prod.lo == prod.hi, exact);
            assert!(prod.contains(a * b) && prod.width() <= 2.0 * ulp(a * b));
            let q = x / y;
            let r = (-(a / b)).mul_add(b, a);
            assert_eq!(q.lo == q.hi, r == 0.0);
            assert!(q.contains(a / b));
            let s = x + y;
            assert_eq!(s.lo == s.hi, sum_err(a, b, a + b) == 0.0);
        }
    }

    #[test]
    fn arithmetic_contains_exact_results() {
        let third = Interval::ONE / 3.0;
        assert!(third.contains(1.0 / 3.0) && third.lo < third.hi);
        let back = third * 3.0;
        assert!(back.contains(1.0));
        let tenth = Interval::point(0.1);
        // 0.1 + 0.2 is not exactly 0.3 in binary, the enclosure must straddle
        // the rounded sum.
        let s = tenth + Interval::point(0.2);
        assert!(s.contains(0.1 + 0.2));
        assert!(s.lo < s.hi);
    }

    #[test]
    fn mul_handles_signs() {
        let a = Interval::new(-2.0, 3.0);
        let b = Interval::new(-1.0, 4.0);
        let p = a * b;
        assert!(p.lo <= -8.0 && p.hi >= 12.0);
        assert!(p.lo > -8.0 - 1e-12 && p.hi < 12.0 + 1e-12);
    }

    #[test]
    fn sqr_of_straddling_interval_starts_at_zero() {
        let s = Interval::new(-0.5, 0.25).sqr();
        assert_eq!(s.lo, 0.0);
        assert!(s.hi >= 0.25);
    }

    #[test]
    #[should_panic]
    fn division_by_zero_interval_panics() {
        let _ = Interval::ONE / Interval::new(-1.0, 1.0);
    }

    #[test]
    fn sqrt_encloses() {
        let r = Interval::point(2.0).sqrt();
        assert!(r.contains(std::f64::consts::SQRT_2));
        assert!(r.sqr().contains(2.0));
    }

    #[test]
    fn trig_constants_are_tight_and_contain_the_float_value() {
        for den in 3..40u64 {
            for num in 1..den {
                let c = cos_pi_ratio(num, den);
                let s = sin_pi_ratio(num, den);
                let theta = num as f64 * PI / den as f64;
                assert!(c.contains(theta.cos()));
                assert!(s.contains(theta.sin()));
                // identity sin^2 + cos^2 = 1 must be consistent with the enclosures
                assert!((c.sqr() + s.sqr()).contains(1.0));
                assert!(c.width() <= 2e-15 && s.width() <= 2e-15, "{num}/{den}: {c} {s}");
            }
        }
        for den in 5..=52u64 {
            let c = cos_pi_ratio(1, den);
            assert!(c.width() <= 4.0 * ulp(c.mid()), "1/{den}: {c}");
        }
        let c7 = cos_pi_ratio(1, 7);
        // cos(pi/7) is a root of 8x^3 - 4x^2 - 4x + 1
        let p = 8.0 * c7.sqr() * c7 - 4.0 * c7.sqr() - 4.0 * c7 + 1.0;
        assert!(p.contains_zero());
    }
}
