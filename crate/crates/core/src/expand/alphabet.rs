use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::{format_rational, parse_rational, Rational};

/// A finite digit set `a_1 < ... < a_J` with `J >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    digits: Vec<Rational>,
}

impl Alphabet {
    pub fn new(mut digits: Vec<Rational>) -> Result<Self> {
        digits.sort();
        let before = digits.len();
        digits.dedup();
        if digits.len() != before {
            return Err(Error::InvalidInput("alphabet digits must be distinct".into()));
        }
        if digits.len() < 2 {
            return Err(Error::InvalidInput("an alphabet needs at least two digits".into()));
        }
        Ok(Alphabet { digits })
    }

    /// `{0, 1, m}`.
    pub fn ternary(m: &Rational) -> Result<Self> {
        if *m <= Rational::one() {
            return Err(Error::InvalidInput(format!("m must exceed 1, got {m}")));
        }
        Self::new(vec![Rational::zero(), Rational::one(), m.clone()])
    }

    /// Parses a comma-separated digit list such as `0,1,3` or `1,3/2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.split(',').map(parse_rational).collect::<Result<_>>()?)
    }

    pub fn digits(&self) -> &[Rational] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> &Rational {
        &self.digits[0]
    }

    pub fn max(&self) -> &Rational {
        &self.digits[self.digits.len() - 1]
    }

    pub fn index_of(&self, x: &Rational) -> Option<usize> {
        self.digits.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.index_of(x).is_some()
    }

    pub fn max_gap(&self) -> Rational {
        self.digits.windows(2).map(|w| &w[1] - &w[0]).max().unwrap_or_default()
    }

    /// `Q_A = 1 + (a_J - a_1) / max gap`, the largest base in which every
    /// point of `[a_1/(q-1), a_J/(q-1)]` has an expansion.
    pub fn q_max(&self) -> Rational {
        Rational::one() + (self.max() - self.min()) / self.max_gap()
    }

    /// `{a_J + a_1 - a_j}`.
    pub fn conjugate(&self) -> Alphabet {
        let s = self.min() + self.max();
        Alphabet { digits: self.digits.iter().rev().map(|a| &s - a).collect() }
    }

    pub fn conjugate_digit(&self, a: &Rational) -> Rational {
        self.min() + self.max() - a
    }

    /// For three digits, the `m >= 2` with the same critical base, and whether
    /// conjugation was needed to reach `{0, 1, m}`.
    pub fn ternary_normal_form(&self) -> Result<(Rational, bool)> {
        let [a1, a2, a3] = self.digits.as_slice() else {
            return Err(Error::InvalidInput(format!("expected three digits, got {}", self.len())));
        };
        let left = (a3 - a1) / (a2 - a1);
        let right = (a3 - a1) / (a3 - a2);
        Ok(if left >= right { (left, false) } else { (right, true) })
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(format_rational).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, rat};

    #[test]
    fn q_max_examples() {
        assert_eq!(Alphabet::parse("0,1").unwrap().q_max(), int(2));
        assert_eq!(Alphabet::parse("0,1,3").unwrap().q_max(), rat(5, 2));
        for m in [int(2), int(3), rat(7, 2), int(9)] {
            let a = Alphabet::ternary(&m).unwrap();
            assert_eq!(a.q_max(), (int(2) * &m - int(1)) / (&m - int(1)));
        }
    }

    #[test]
    fn conjugate_and_normal_form() {
        let a = Alphabet::parse("0,2,3").unwrap();
        assert_eq!(a.conjugate(), Alphabet::parse("0,1,3").unwrap());
        assert_eq!(a.ternary_normal_form().unwrap(), (int(3), true));
        let b = Alphabet::parse("1,3/2,3").unwrap();
        assert_eq!(b.ternary_normal_form().unwrap(), (int(4), false));
        assert!(Alphabet::parse("1,1").is_err());
    }
}
