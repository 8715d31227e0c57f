//! Closed rational intervals and an outward-rounded variant used as a field.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::rational::{ceil_dyadic, floor_dyadic, format_fixed, to_f64, Rational};

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Encloses `max(x, y)` for `x` in `self` and `y` in `other`.
    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Sign of every member, if they all share one.
    pub fn sign(&self) -> Option<Ordering> {
        let zero = Rational::zero();
        if self.lo > zero {
            Some(Ordering::Greater)
        } else if self.hi < zero {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Order of every pair of members, if it is the same for all pairs.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if other.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.is_point() && other.is_point() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn to_fixed(&self, digits: u32) -> String {
        format_fixed(&self.midpoint(), digits)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", to_f64(&self.lo), to_f64(&self.hi))
    }
}

/// An interval whose endpoints are rounded outward to multiples of `2^-prec`
/// after every operation, keeping representations bounded in size.
#[derive(Clone, Debug)]
pub struct RoundedInterval {
    iv: Interval,
    prec: u32,
}

impl RoundedInterval {
    pub fn new(iv: Interval, prec: u32) -> Self {
        Self::rounded(iv.lo, iv.hi, prec)
    }

    pub fn from_rational(x: &Rational, prec: u32) -> Self {
        Self::rounded(x.clone(), x.clone(), prec)
    }

    fn rounded(lo: Rational, hi: Rational, prec: u32) -> Self {
        let lo = if lo.is_integer() { lo } else { floor_dyadic(&lo, prec) };
        let hi = if hi.is_integer() { hi } else { ceil_dyadic(&hi, prec) };
        RoundedInterval { iv: Interval { lo, hi }, prec }
    }

    pub fn interval(&self) -> &Interval {
        &self.iv
    }

    pub fn into_interval(self) -> Interval {
        self.iv
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }
}

impl Field for RoundedInterval {
    fn lift(&self, x: &Rational) -> Self {
        Self::from_rational(x, self.prec)
    }

    fn plus(&self, rhs: &Self) -> Self {
        Self::rounded(&self.iv.lo + &rhs.iv.lo, &self.iv.hi + &rhs.iv.hi, self.prec)
    }

    fn minus(&self, rhs: &Self) -> Self {
        Self::rounded(&self.iv.lo - &rhs.iv.hi, &self.iv.hi - &rhs.iv.lo, self.prec)
    }

    fn times(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.iv, &rhs.iv);
        if !a.lo.is_negative() && !b.lo.is_negative() {
            return Self::rounded(&a.lo * &b.lo, &a.hi * &b.hi, self.prec);
        }
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Self::rounded(lo, hi, self.prec)
    }

    fn recip(&self) -> Option<Self> {
        if self.iv.sign().map_or(true, |s| s == Ordering::Equal) {
            return None;
        }
        let one = Rational::one();
        Some(Self::rounded(&one / &self.iv.hi, &one / &self.iv.lo, self.prec))
    }

    fn sign(&self) -> Option<Ordering> {
        self.iv.sign()
    }
}
