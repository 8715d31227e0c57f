//! Quasi-greedy and quasi-lazy expansions.

use std::cmp::Ordering;

use super::alphabet::Alphabet;
use super::pi::DigitWord;
use super::unique::check_base;
use crate::error::{Error, Result};
use crate::numeric::{Field, Rational};

fn positive<F: Field>(x: &F) -> Result<bool> {
    x.sign()
        .map(|s| s == Ordering::Greater)
        .ok_or_else(|| Error::Undecided("digit selection".into()))
}

fn endpoints<F: Field>(q: &F, alphabet: &Alphabet) -> Result<(F, F)> {
    let denom = q.minus(&q.one_like());
    let low = q.lift(alphabet.min()).divide(&denom);
    let high = q.lift(alphabet.max()).divide(&denom);
    low.zip(high).ok_or_else(|| Error::BaseOutOfRange(format!("{q:?}")))
}

/// Iterator state of the quasi-greedy algorithm: the next digit is the largest
/// `a` leaving a remainder strictly above `a_1/(q-1)`.
struct Greedy<'a, F> {
    q: F,
    low: F,
    alphabet: &'a Alphabet,
    rest: F,
}

impl<F: Field> Greedy<'_, F> {
    fn step(&mut self) -> Result<Rational> {
        let scaled = self.q.times(&self.rest);
        for a in self.alphabet.digits().iter().rev() {
            let next = scaled.minus(&self.q.lift(a));
            if positive(&next.minus(&self.low))? {
                self.rest = next;
                return Ok(a.clone());
            }
        }
        Err(Error::Internal("no admissible digit in quasi-greedy step".into()))
    }
}

fn start<'a, F: Field>(x: &F, q: &F, alphabet: &'a Alphabet) -> Result<Greedy<'a, F>> {
    check_base(q, alphabet)?;
    let (low, high) = endpoints(q, alphabet)?;
    if !positive(&x.minus(&low))? || positive(&x.minus(&high))? {
        return Err(Error::ValueOutOfRange(format!("{x:?}")));
    }
    Ok(Greedy { q: q.clone(), low, alphabet, rest: x.clone() })
}

/// First `n_digits` digits of the lexicographically largest infinite expansion
/// of `x`; needs `a_1/(q-1) < x <= a_J/(q-1)`.
pub fn quasi_greedy<F: Field>(x: &F, q: &F, alphabet: &Alphabet, n_digits: usize) -> Result<Vec<Rational>> {
    let mut g = start(x, q, alphabet)?;
    (0..n_digits).map(|_| g.step()).collect()
}

/// The full quasi-greedy expansion, found by detecting a repeated remainder
/// within `max_digits` steps.
pub fn quasi_greedy_word<F: Field + PartialEq>(x: &F, q: &F, alphabet: &Alphabet, max_digits: usize) -> Result<Option<DigitWord>> {
    let mut g = start(x, q, alphabet)?;
    let mut seen = vec![g.rest.clone()];
    let mut digits = Vec::new();
    for _ in 0..max_digits {
        digits.push(g.step()?);
        if let Some(k) = seen.iter().position(|r| *r == g.rest) {
            let per = digits.split_off(k);
            return DigitWord::new(digits, per).map(Some);
        }
        seen.push(g.rest.clone());
    }
    Ok(None)
}

fn mirror<F: Field>(x: &F, q: &F, alphabet: &Alphabet) -> Result<F> {
    let (low, high) = endpoints(q, alphabet)?;
    Ok(low.plus(&high).minus(x))
}

/// Conjugate of the quasi-greedy expansion of `(a_1 + a_J)/(q-1) - x` on the
/// conjugate alphabet; needs `a_1/(q-1) <= x < a_J/(q-1)`.
pub fn quasi_lazy<F: Field>(x: &F, q: &F, alphabet: &Alphabet, n_digits: usize) -> Result<Vec<Rational>> {
    let conj = alphabet.conjugate();
    let digits = quasi_greedy(&mirror(x, q, alphabet)?, q, &conj, n_digits)?;
    Ok(digits.iter().map(|d| alphabet.conjugate_digit(d)).collect())
}

/// The full quasi-lazy expansion when it is eventually periodic within `max_digits`.
pub fn quasi_lazy_word<F: Field + PartialEq>(x: &F, q: &F, alphabet: &Alphabet, max_digits: usize) -> Result<Option<DigitWord>> {
    let conj = alphabet.conjugate();
    let word = quasi_greedy_word(&mirror(x, q, alphabet)?, q, &conj, max_digits)?;
    Ok(word.map(|w| w.map(|d| alphabet.conjugate_digit(d))))
}
