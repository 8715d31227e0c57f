//! Helpers around arbitrary-precision rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

pub fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), exp as usize)
}

/// Parses `p/q`, integers and decimal literals (`2.2`, `-0.5`, `1e-6`) as exact rationals.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{whole}{frac}");
    let mut n: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().map_err(|_| bad())? };
    if negative {
        n = -n;
    }
    let scale = exponent - frac.len() as i32;
    let value = if scale >= 0 {
        Rational::from_integer(n * pow10(scale as u32))
    } else {
        Rational::new(n, pow10((-scale) as u32))
    };
    Ok(value)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn floor_dyadic(x: &Rational, bits: u32) -> Rational {
    let scaled = x * Rational::from_integer(pow2(bits));
    Rational::new(scaled.floor().to_integer(), pow2(bits))
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn ceil_dyadic(x: &Rational, bits: u32) -> Rational {
    let scaled = x * Rational::from_integer(pow2(bits));
    Rational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Square root of a nonnegative integer if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Square root of a nonnegative rational if it is rational.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    let n = exact_isqrt(x.numer())?;
    let d = exact_isqrt(x.denom())?;
    Some(Rational::new(n, d))
}

/// Rational bounds `lo <= sqrt(x) <= hi` with `hi - lo <= 2^-bits`.
pub fn sqrt_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!x.is_negative(), "sqrt of a negative rational");
    if let Some(r) = exact_sqrt(x) {
        return (r.clone(), r);
    }
    // floor(sqrt(x * 4^bits)) / 2^bits
    let scaled = x * Rational::from_integer(pow2(2 * bits));
    let s = scaled.floor().to_integer().sqrt();
    let lo = Rational::new(s.clone(), pow2(bits));
    let hi = Rational::new(s + 1, pow2(bits));
    (lo, hi)
}

/// The rational with the smallest denominator (then numerator) in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let floor = lo.floor();
    if &floor == lo {
        return floor;
    }
    let next = &floor + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + inner.recip()
}

/// Decimal rendering with exactly `digits` fractional digits, rounded half away from zero.
pub fn format_fixed(x: &Rational, digits: u32) -> String {
    let scaled = x * Rational::from_integer(pow10(digits));
    let rounded = scaled.abs().round().to_integer();
    let (q, r) = rounded.div_rem(&pow10(digits));
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{q}");
    }
    format!("{sign}{q}.{:0>width$}", r.to_string(), width = digits as usize)
}

/// `p/q`, or `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_zero(x: &Rational) -> bool {
    x.numer().sign() == Sign::NoSign
}
