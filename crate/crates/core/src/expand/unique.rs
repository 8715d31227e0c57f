//! Uniqueness of expansions in a given base.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use super::alphabet::Alphabet;
use super::pi::{eval_pi_closed, DigitWord};
use crate::error::{Error, Result};
use crate::numeric::{Field, Rational};

/// Which inequality failed, and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 1-based position `n` of the digit `c_n`.
    pub position: usize,
    /// Index of the failed condition.
    pub condition: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub unique: bool,
    pub first_violation: Option<Violation>,
}

impl ExpansionReport {
    fn from_violation(v: Option<Violation>) -> Self {
        ExpansionReport { unique: v.is_none(), first_violation: v }
    }
}

impl fmt::Display for ExpansionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_violation {
            None => write!(f, "unique"),
            Some(v) => write!(f, "not unique (condition {} fails at n={})", v.condition, v.position),
        }
    }
}

fn strictly_less<F: Field>(a: &F, b: &F) -> Result<bool> {
    a.minus(b)
        .sign()
        .map(|s| s == Ordering::Less)
        .ok_or_else(|| Error::Undecided("uniqueness inequality".into()))
}

fn is_trivial(c: &DigitWord, alphabet: &Alphabet) -> bool {
    c.is_constant() && (c.digit(0) == alphabet.min() || c.digit(0) == alphabet.max())
}

fn trivially_unique<F: Field>(c: &DigitWord, q: &F, alphabet: &Alphabet) -> Result<bool> {
    if !is_trivial(c, alphabet) {
        return Ok(false);
    }
    if q.minus(&q.one_like()).sign() != Some(Ordering::Greater) {
        return Err(Error::BaseOutOfRange(format!("{q:?} not above 1")));
    }
    Ok(true)
}

pub(crate) fn check_base<F: Field>(q: &F, alphabet: &Alphabet) -> Result<()> {
    let above_one = q.minus(&q.one_like()).sign() == Some(Ordering::Greater);
    let below_max = q.minus(&q.lift(&alphabet.q_max())).sign().is_some_and(|s| s != Ordering::Greater);
    if above_one && below_max {
        Ok(())
    } else {
        Err(Error::BaseOutOfRange(format!("{q:?} not in (1, {}]", alphabet.q_max())))
    }
}

pub(crate) fn check_digits(c: &DigitWord, alphabet: &Alphabet) -> Result<()> {
    match c.preperiod().iter().chain(c.period()).find(|d| !alphabet.contains(d)) {
        Some(d) => Err(Error::InvalidInput(format!("digit {d} is not in {alphabet}"))),
        None => Ok(()),
    }
}

/// Decides uniqueness of the expansion `c` in base `q` by checking, for every
/// distinct pair `(c_n, tail)`:
///
/// 1. `pi(tail - a_1) < a_{j+1} - a_j` when `c_n = a_j < a_J`;
/// 2. `pi(a_J - tail) < a_j - a_{j-1}` when `c_n = a_j > a_1`.
///
/// The constant words `a_1^inf` and `a_J^inf` are unique in every base `q > 1`;
/// any other word needs `1 < q <= Q_A`.
pub fn is_unique<F: Field>(c: &DigitWord, q: &F, alphabet: &Alphabet) -> Result<ExpansionReport> {
    if trivially_unique(c, q, alphabet)? {
        return Ok(ExpansionReport::from_violation(None));
    }
    check_base(q, alphabet)?;
    check_digits(c, alphabet)?;
    let a = alphabet.digits();
    let j_max = a.len() - 1;
    let lower = eval_pi_closed(&DigitWord::constant(alphabet.min().clone()), q)?;
    let upper = eval_pi_closed(&DigitWord::constant(alphabet.max().clone()), q)?;
    let count = c.preperiod().len() + c.period().len();
    for n in 1..=count {
        let j = alphabet.index_of(c.digit(n - 1)).unwrap_or_default();
        let tail = eval_pi_closed(&c.shift(n), q)?;
        if j < j_max && !strictly_less(&tail.minus(&lower), &q.lift(&(&a[j + 1] - &a[j])))? {
            return Ok(ExpansionReport::from_violation(Some(Violation { position: n, condition: 1 })));
        }
        if j > 0 && !strictly_less(&upper.minus(&tail), &q.lift(&(&a[j] - &a[j - 1])))? {
            return Ok(ExpansionReport::from_violation(Some(Violation { position: n, condition: 2 })));
        }
    }
    Ok(ExpansionReport::from_violation(None))
}

/// The same decision on `{0, 1, m}` through four direct inequalities on
/// `t = pi(tail)`:
///
/// 1. `t < 1` after a 0;
/// 2. `t < m - 1` after a 1;
/// 3. `t > m/(q-1) - 1` after a 1;
/// 4. `t > m/(q-1) - (m-1)` after an m.
pub fn is_unique_ternary<F: Field>(c: &DigitWord, q: &F, m: &Rational) -> Result<ExpansionReport> {
    let alphabet = Alphabet::ternary(m)?;
    if trivially_unique(c, q, &alphabet)? {
        return Ok(ExpansionReport::from_violation(None));
    }
    check_base(q, &alphabet)?;
    check_digits(c, &alphabet)?;
    let one = q.one_like();
    let top = eval_pi_closed(&DigitWord::constant(m.clone()), q)?;
    let m_minus_one = q.lift(&(m - Rational::one()));
    let count = c.preperiod().len() + c.period().len();
    for n in 1..=count {
        let digit = c.digit(n - 1);
        let t = eval_pi_closed(&c.shift(n), q)?;
        let failed = if digit == &Rational::default() {
            (!strictly_less(&t, &one)?).then_some(1)
        } else if digit.is_one() {
            if !strictly_less(&t, &m_minus_one)? {
                Some(2)
            } else {
                (!strictly_less(&top.minus(&one), &t)?).then_some(3)
            }
        } else {
            (!strictly_less(&top.minus(&m_minus_one), &t)?).then_some(4)
        };
        if let Some(condition) = failed {
            return Ok(ExpansionReport::from_violation(Some(Violation { position: n, condition })));
        }
    }
    Ok(ExpansionReport::from_violation(None))
}
