//! Exact numbers `a + b*sqrt(r)` with rational `a`, `b`, `r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::interval::Interval;
use super::rational::{exact_sqrt, format_rational, sqrt_bounds, Rational};
use crate::error::{Error, Result};

/// An element `a + b*sqrt(r)` of the real quadratic field `Q(sqrt(r))`.
///
/// `r` is positive and never the square of a rational: such radicands collapse
/// into `a` on construction. When `b = 0` the radicand is irrelevant and the
/// value mixes freely with any other radicand.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    r: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, r: Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidInput(format!("radicand must be positive, got {r}")));
        }
        Ok(match exact_sqrt(&r) {
            Some(root) => QuadExt { a: a + b * root, b: Rational::zero(), r: Rational::one() },
            None => {
                let (outside, inside) = reduce_radicand(&r);
                QuadExt { a, b: b * outside, r: inside }
            }
        })
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), r: Rational::one() }
    }

    /// `sqrt(r)` itself.
    pub fn sqrt(r: Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), r)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    fn common_radicand(&self, other: &Self) -> Rational {
        if self.b.is_zero() {
            other.r.clone()
        } else if other.b.is_zero() || self.r == other.r {
            self.r.clone()
        } else {
            panic!("mixed radicands {} and {} in one operation", self.r, other.r)
        }
    }

    /// `a^2 - b^2 r`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.r
    }

    pub fn conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, r: self.r.clone() }
    }

    /// Exact sign, decided by comparing `a^2` with `b^2 r`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2r = &self.b * &self.b * &self.r;
        match a2.cmp(&b2r) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Exact comparison, also across different radicands.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if self.b.is_zero() || other.b.is_zero() || self.r == other.r {
            return (self - other).signum();
        }
        // alpha - beta with alpha in Q(sqrt r) and beta = d sqrt(s)
        let alpha = QuadExt { a: &self.a - &other.a, b: self.b.clone(), r: self.r.clone() };
        let sign_alpha = alpha.signum();
        let sign_beta = other.b.cmp(&Rational::zero());
        match (sign_alpha, sign_beta) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (sa, sb) if sa != Ordering::Less && sb != Ordering::Greater => Ordering::Greater,
            (sa, sb) if sa != Ordering::Greater && sb != Ordering::Less => Ordering::Less,
            (sa, _) => {
                let beta_sq = &other.b * &other.b * &other.r;
                let diff = (&alpha * &alpha - QuadExt::rational(beta_sq)).signum();
                if sa == Ordering::Greater {
                    diff
                } else {
                    diff.reverse()
                }
            }
        }
    }

    pub fn enclose(&self, bits: u32) -> Interval {
        if self.b.is_zero() {
            return Interval::point(self.a.clone());
        }
        let (lo, hi) = sqrt_bounds(&self.r, bits + 8);
        let x = &self.b * &lo;
        let y = &self.b * &hi;
        let (l, h) = if x <= y { (x, y) } else { (y, x) };
        Interval::new(&self.a + l, &self.a + h)
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose(80).midpoint_f64()
    }

    /// Symbolic form such as `(3+sqrt(33))/4`, `1+sqrt(2)` or `7/3`.
    pub fn symbolic(&self) -> String {
        if self.b.is_zero() {
            return format_rational(&self.a);
        }
        // sqrt(n/d) = sqrt(n d) / d, then pull square factors out of n d
        let radicand = self.r.numer() * self.r.denom();
        let (outside, inside) = split_square_factor(&radicand);
        let coeff = &self.b * Rational::new(outside, self.r.denom().clone());
        let denom = num_integer::Integer::lcm(self.a.denom(), coeff.denom());
        let big_a = (&self.a * Rational::from_integer(denom.clone())).to_integer();
        let big_b = (&coeff * Rational::from_integer(denom.clone())).to_integer();
        let mut out = String::new();
        if !big_a.is_zero() {
            out.push_str(&big_a.to_string());
        }
        let magnitude = big_b.abs();
        let sign = if big_b.is_negative() { "-" } else if big_a.is_zero() { "" } else { "+" };
        out.push_str(sign);
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(&format!("sqrt({inside})"));
        if denom.is_one() {
            out
        } else {
            format!("({out})/{denom}")
        }
    }
}

/// Writes `n = k^2 * s` pulling out square factors of primes below a small bound.
fn split_square_factor(n: &BigInt) -> (BigInt, BigInt) {
    let mut outside = BigInt::one();
    let mut inside = n.clone();
    let mut p = 2u32;
    while p < 20_000 {
        let pp = BigInt::from(p) * BigInt::from(p);
        if pp > inside {
            break;
        }
        while (&inside % &pp).is_zero() {
            inside /= &pp;
            outside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, inside)
}

/// `sqrt(r) = outside * sqrt(inside)` with `inside` an integer cleared of
/// small square factors.
fn reduce_radicand(r: &Rational) -> (Rational, Rational) {
    let mut n = r.numer() * r.denom();
    let mut outside = Rational::new(BigInt::one(), r.denom().clone());
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(1u32 << 12);
    while p <= bound && &p * &p <= n {
        let sq = &p * &p;
        while (&n % &sq).is_zero() {
            n /= &sq;
            outside *= Rational::from_integer(p.clone());
        }
        p += 1;
    }
    (outside, Rational::from_integer(n))
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b.signum() == other.b.signum()
            && &self.b * &self.b * &self.r == &other.b * &other.b * &other.r
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbolic())
    }
}

impl From<Rational> for QuadExt {
    fn from(a: Rational) -> Self {
        QuadExt::rational(a)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let r = self.common_radicand(rhs);
        QuadExt { a: &self.a + &rhs.a, b: &self.b + &rhs.b, r }
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let r = self.common_radicand(rhs);
        QuadExt { a: &self.a - &rhs.a, b: &self.b - &rhs.b, r }
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let r = self.common_radicand(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &r;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt { a, b, r }
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        let inv = Field::recip(rhs).expect("division by zero");
        self * &inv
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, r: self.r.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Field for QuadExt {
    fn lift(&self, x: &Rational) -> Self {
        QuadExt { a: x.clone(), b: Rational::zero(), r: self.r.clone() }
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadExt { a: &self.a / &n, b: -&self.b / &n, r: self.r.clone() })
    }

    fn sign(&self) -> Option<Ordering> {
        Some(self.signum())
    }
}
