//! Critical base of a single eventually periodic sequence.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::One;

use super::alphabet::Alphabet;
use super::pi::{eval_pi_closed, DigitWord};
use super::unique::check_digits;
use crate::error::Result;
use crate::numeric::rational::pow2;
use crate::numeric::{solve_monotone, Interval, Poly, Rational, Real};

/// Where the threshold of one condition falls inside `(1, Q_A]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    /// The condition holds in every base.
    Always,
    /// The condition holds exactly for `q > root`.
    Above(Real),
    /// The condition fails in every admissible base.
    Never,
}

/// One inequality of the uniqueness test together with its threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionRoot {
    pub position: usize,
    pub condition: u8,
    pub digit: Rational,
    pub threshold: Threshold,
}

impl ConditionRoot {
    /// The threshold clamped to `[1, Q_A]`.
    pub fn value(&self, q_max: &Rational) -> Real {
        match &self.threshold {
            Threshold::Always => Real::rational(Rational::one()),
            Threshold::Above(r) => r.clone(),
            Threshold::Never => Real::rational(q_max.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalBase {
    pub value: Real,
    pub conditions: Vec<ConditionRoot>,
}

/// Threshold of `pi_q(w) < bound`, the left side being decreasing in `q`.
fn threshold(w: &DigitWord, bound: &Rational, q_max: &Rational, tol: &Rational) -> Result<Threshold> {
    if w.is_constant() && w.digit(0) == &Rational::default() {
        return Ok(Threshold::Always);
    }
    let sign_at = |q: &Rational| eval_pi_closed(w, q).ok().map(|v| (v - bound).cmp(&Rational::default()));
    let lo = Rational::one() + Rational::new(1.into(), pow2(40));
    if sign_at(q_max) != Some(Ordering::Less) {
        return Ok(Threshold::Never);
    }
    if sign_at(&lo) == Some(Ordering::Less) {
        return Ok(Threshold::Above(Real::Approx(Interval::new(Rational::one(), lo))));
    }
    let equation = Poly::for_series_value(w.preperiod(), w.period(), bound);
    solve_monotone(sign_at, lo, q_max.clone(), tol, Some(&equation)).map(Threshold::Above)
}

/// The smallest base above which `c` is unique, with the threshold of every
/// distinct condition of the uniqueness test.
pub fn critical_base_of_sequence(c: &DigitWord, alphabet: &Alphabet, tol: &Rational) -> Result<CriticalBase> {
    check_digits(c, alphabet)?;
    let a = alphabet.digits();
    let (lo, hi) = (alphabet.min(), alphabet.max());
    let q_max = alphabet.q_max();
    let mut seen = HashSet::new();
    let mut conditions = Vec::new();
    let count = c.preperiod().len() + c.period().len();
    for n in 1..=count {
        let digit = c.digit(n - 1).clone();
        let j = alphabet.index_of(&digit).unwrap_or_default();
        let tail = c.shift(n);
        if j + 1 < a.len() && seen.insert((1u8, digit.clone(), tail.clone())) {
            let w = tail.map(|x| x - lo);
            let threshold = threshold(&w, &(&a[j + 1] - &a[j]), &q_max, tol)?;
            conditions.push(ConditionRoot { position: n, condition: 1, digit: digit.clone(), threshold });
        }
        if j > 0 && seen.insert((2u8, digit.clone(), tail.clone())) {
            let w = tail.map(|x| hi - x);
            let threshold = threshold(&w, &(&a[j] - &a[j - 1]), &q_max, tol)?;
            conditions.push(ConditionRoot { position: n, condition: 2, digit, threshold });
        }
    }
    let value = conditions
        .iter()
        .map(|c| c.value(&q_max))
        .fold(Real::rational(Rational::one()), |acc, v| acc.max(&v));
    Ok(CriticalBase { value, conditions })
}
