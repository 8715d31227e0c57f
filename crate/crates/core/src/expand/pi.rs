use std::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::numeric::{Field, Rational};
use crate::words::EventuallyPeriodicWord;

/// A digit word over rationals.
pub type DigitWord = EventuallyPeriodicWord<Rational>;

/// `(sum_i w_i q^-i, q^-len)` of a finite word.
pub fn finite_value<F: Field>(digits: &[Rational], inv_q: &F) -> (F, F) {
    let one = inv_q.one_like();
    digits.iter().rev().fold((inv_q.zero_like(), one), |(v, s), d| {
        (inv_q.times(&inv_q.lift(d).plus(&v)), s.times(inv_q))
    })
}

/// Exact value of `sum_i w_i q^-i` for an eventually periodic word.
pub fn eval_pi_closed<F: Field>(w: &DigitWord, q: &F) -> Result<F> {
    if q.minus(&q.one_like()).sign() != Some(Ordering::Greater) {
        return Err(Error::BaseOutOfRange(format!("{q:?}")));
    }
    let inv_q = q.recip().ok_or_else(|| Error::BaseOutOfRange(format!("{q:?}")))?;
    let (u, s_pre) = finite_value(w.preperiod(), &inv_q);
    let (v, s_per) = finite_value(w.period(), &inv_q);
    let tail = v
        .divide(&q.one_like().minus(&s_per))
        .ok_or_else(|| Error::Internal("geometric ratio equal to one".into()))?;
    Ok(u.plus(&s_pre.times(&tail)))
}

/// Partial sum of the first `k` terms.
pub fn eval_pi_truncated(w: &DigitWord, q: &Rational, k: usize) -> Rational {
    let inv = Rational::one() / q;
    let mut scale = Rational::one();
    let mut total = Rational::default();
    for d in w.digits().take(k) {
        scale *= &inv;
        total += d * &scale;
    }
    total
}
