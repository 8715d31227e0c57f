//! Evaluation of `pi_q` on words given as block concatenations, with a
//! cascade of arithmetic tiers.

use std::cmp::Ordering;

use num_traits::One;

use crate::numeric::{F64Interval, Field, QuadExt, Rational, RoundedInterval};
use crate::words::BlockForm;

/// Longest word evaluated in exact arithmetic.
pub const EXACT_LIMIT: u128 = 1024;

/// Working precisions, in bits, tried after exact arithmetic is ruled out.
pub const PRECISIONS: [u32; 3] = [256, 1024, 4096];

/// A base of numeration: a rational or an element of a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Rational(Rational),
    Quad(QuadExt),
}

impl Base {
    fn fast(&self) -> F64Interval {
        match self {
            Base::Rational(q) => F64Interval::from_rational(q),
            Base::Quad(q) => F64Interval::from_interval(&q.enclose(64)),
        }
    }

    fn rounded(&self, prec: u32) -> RoundedInterval {
        match self {
            Base::Rational(q) => RoundedInterval::from_rational(q, prec),
            Base::Quad(q) => RoundedInterval::new(q.enclose(prec + 16), prec),
        }
    }
}

/// `(value, q^-length)` of a finite word.
#[derive(Clone, Debug)]
struct Piece<F> {
    v: F,
    s: F,
}

impl<F: Field> Piece<F> {
    fn empty(like: &F) -> Self {
        Piece { v: like.zero_like(), s: like.one_like() }
    }

    fn then(&self, next: &Piece<F>) -> Self {
        Piece { v: self.v.plus(&self.s.times(&next.v)), s: self.s.times(&next.s) }
    }

    fn pow(&self, mut k: u64) -> Self {
        let mut acc = Piece::empty(&self.v);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.then(&base);
            }
        }
        acc
    }
}

/// Digit values substituted for the bits 1 and 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitMap {
    pub one: Rational,
    pub zero: Rational,
}

impl DigitMap {
    /// `1 -> m`, `0 -> 1`.
    pub fn delta(m: &Rational) -> Self {
        DigitMap { one: m.clone(), zero: Rational::one() }
    }

    /// `1 -> 0`, `0 -> m - 1`: the conjugate `m - delta`.
    pub fn conjugate_delta(m: &Rational) -> Self {
        DigitMap { one: Rational::default(), zero: m - Rational::one() }
    }
}

/// `pi_q` of a block form under a digit map, in any field.
pub fn eval_form<F: Field>(form: &BlockForm, digits: &DigitMap, q: &F) -> Option<F> {
    let inv = q.recip()?;
    let top = form.pre.iter().chain(&form.per).map(|p| p.0).max().unwrap_or(0);
    let mut ones = vec![Piece { v: inv.times(&inv.lift(&digits.one)), s: inv.clone() }];
    let mut zeros = vec![Piece { v: inv.times(&inv.lift(&digits.zero)), s: inv.clone() }];
    for j in 1..=top {
        let zero = ones[j - 1].pow(form.h[j - 1] - 1).then(&zeros[j - 1]);
        ones.push(ones[j - 1].then(&zero));
        zeros.push(zero);
    }
    let concat = |pieces: &[(usize, u8)]| {
        pieces.iter().fold(Piece::empty(&inv), |acc, &(level, bit)| {
            acc.then(if bit == 1 { &ones[level] } else { &zeros[level] })
        })
    };
    let pre = concat(&form.pre);
    let per = concat(&form.per);
    let tail = per.v.divide(&inv.one_like().minus(&per.s))?;
    Some(pre.v.plus(&pre.s.times(&tail)))
}

fn sign_in<F: Field>(form: &BlockForm, digits: &DigitMap, q: &F, target: &Rational) -> Option<Ordering> {
    eval_form(form, digits, q)?.minus(&q.lift(target)).sign()
}

/// Sign of `pi_q(word) - target`: machine intervals first, then exact
/// arithmetic for short words, then growing working precisions.
pub fn sign_vs(form: &BlockForm, digits: &DigitMap, q: &Base, target: &Rational) -> Option<Ordering> {
    if let Some(s) = sign_in(form, digits, &q.fast(), target) {
        return Some(s);
    }
    exact_sign(form, digits, q, target).or_else(|| {
        PRECISIONS.iter().find_map(|&prec| sign_in(form, digits, &q.rounded(prec), target))
    })
}

/// Exact sign when the word is short enough.
pub fn exact_sign(form: &BlockForm, digits: &DigitMap, q: &Base, target: &Rational) -> Option<Ordering> {
    if form.total_len() > EXACT_LIMIT {
        return None;
    }
    match q {
        Base::Rational(q) => sign_in(form, digits, q, target),
        Base::Quad(q) => sign_in(form, digits, q, target),
    }
}
