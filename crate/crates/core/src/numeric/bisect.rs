//! Sign-driven bisection for monotone functions.

use std::cmp::Ordering;

use super::interval::Interval;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Outcome of a bisection: a bracket around the zero, pinned when an
/// evaluation hit it exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub bracket: Interval,
    pub exact: Option<Rational>,
    pub steps: u32,
}

/// Bisects `[lo, hi]` until its width is at most `tol`.
///
/// `sign_at` reports the sign of a strictly monotone function, or `None` when
/// the evaluation cannot decide it. The endpoints must carry opposite signs
/// (or one of them is an exact zero).
pub fn bisect<F>(mut sign_at: F, lo: Rational, hi: Rational, tol: &Rational) -> Result<Root>
where
    F: FnMut(&Rational) -> Option<Ordering>,
{
    let undecided = |x: &Rational| Error::Undecided(format_rational(x));
    let s_lo = sign_at(&lo).ok_or_else(|| undecided(&lo))?;
    if s_lo == Ordering::Equal {
        return Ok(pinned(lo, 0));
    }
    let s_hi = sign_at(&hi).ok_or_else(|| undecided(&hi))?;
    if s_hi == Ordering::Equal {
        return Ok(pinned(hi, 0));
    }
    if s_lo == s_hi {
        return Err(Error::NoSignChange { lo: format_rational(&lo), hi: format_rational(&hi) });
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut steps = 0;
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        steps += 1;
        match sign_at(&mid).ok_or_else(|| undecided(&mid))? {
            Ordering::Equal => return Ok(pinned(mid, steps)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(Root { bracket: Interval::new(lo, hi), exact: None, steps })
}

fn pinned(x: Rational, steps: u32) -> Root {
    Root { bracket: Interval::point(x.clone()), exact: Some(x), steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, parse_rational};
    use num_traits::Zero;

    fn sign(x: Rational) -> Option<Ordering> {
        Some(x.cmp(&Rational::zero()))
    }

    #[test]
    fn square_root_of_two() {
        let tol = parse_rational("1e-12").unwrap();
        let root = bisect(|q| sign(q * q - int(2)), int(1), int(2), &tol).unwrap();
        assert!(root.bracket.width() <= tol);
        assert!((root.bracket.midpoint_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn exact_hit_is_pinned() {
        let root = bisect(|x| sign(x - int(3) / int(2)), int(1), int(2), &int(0)).unwrap();
        assert_eq!(root.exact, Some(int(3) / int(2)));
    }

    #[test]
    fn rejects_missing_sign_change() {
        let err = bisect(|x| sign(x * x + int(1)), int(-1), int(1), &int(1)).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }
}
