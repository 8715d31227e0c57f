//! Machine-precision intervals with outward rounding by one ulp per operation.

use std::cmp::Ordering;

use super::field::Field;
use super::interval::Interval;
use super::rational::{to_f64, Rational};

/// An `f64` enclosure `[lo, hi]`. Every operation rounds to nearest and then
/// steps one ulp outward, which keeps the true result inside.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64Interval {
    pub lo: f64,
    pub hi: f64,
}

impl F64Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        F64Interval { lo, hi }
    }

    /// Encloses a rational; conversion is widened by two ulps on each side.
    pub fn from_rational(x: &Rational) -> Self {
        let v = to_f64(x);
        F64Interval { lo: v.next_down().next_down(), hi: v.next_up().next_up() }
    }

    pub fn from_interval(iv: &Interval) -> Self {
        let lo = Self::from_rational(iv.lo()).lo;
        let hi = Self::from_rational(iv.hi()).hi;
        F64Interval { lo, hi }
    }

    pub fn sqrt(&self) -> Self {
        F64Interval { lo: self.lo.max(0.0).sqrt().next_down().max(0.0), hi: self.hi.sqrt().next_up() }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    fn out(lo: f64, hi: f64) -> Self {
        F64Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}

impl Field for F64Interval {
    fn lift(&self, x: &Rational) -> Self {
        Self::from_rational(x)
    }

    fn plus(&self, rhs: &Self) -> Self {
        Self::out(self.lo + rhs.lo, self.hi + rhs.hi)
    }

    fn minus(&self, rhs: &Self) -> Self {
        Self::out(self.lo - rhs.hi, self.hi - rhs.lo)
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.lo >= 0.0 && rhs.lo >= 0.0 {
            return Self::out(self.lo * rhs.lo, self.hi * rhs.hi);
        }
        let p = [self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self::out(lo, hi)
    }

    fn recip(&self) -> Option<Self> {
        if !self.is_finite() || (self.lo <= 0.0 && self.hi >= 0.0) {
            return None;
        }
        Some(Self::out(1.0 / self.hi, 1.0 / self.lo))
    }

    fn sign(&self) -> Option<Ordering> {
        if self.lo.is_nan() || self.hi.is_nan() {
            None
        } else if self.lo > 0.0 {
            Some(Ordering::Greater)
        } else if self.hi < 0.0 {
            Some(Ordering::Less)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}
