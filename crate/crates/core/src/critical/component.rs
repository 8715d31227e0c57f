//! Component intervals `I_d = [m_d, M_d)` and the interior minimum `mu_d`.

use std::cmp::Ordering;

use num_traits::One;

use super::context::MContext;
use super::eval::{eval_form, DigitMap, PRECISIONS};
use super::roots::compare_roots;
use crate::error::{Error, Result};
use crate::numeric::rational::{pow2, simplest_between};
use crate::numeric::{bisect, solve_monotone, F64Interval, Field, Interval, Rational, RoundedInterval, Real};
use crate::words::admissible::{ones_tail_form, periodic_form};
use crate::words::{AdmissibleSeq, BlockForm};

const GROWTH_LIMIT: u32 = 80;
const SMALL_DENOMINATOR: i64 = 1 << 16;

/// `m_d`, `mu_d` and `M_d` for one sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentInterval {
    pub d: AdmissibleSeq,
    pub m_d: Real,
    pub mu_d: Real,
    pub big_m_d: Real,
}

impl ComponentInterval {
    /// Sign of `m` relative to `[m_d, M_d)`: `Less` below, `Equal` inside,
    /// `Greater` at or above `M_d`. `None` when an enclosure straddles `m`.
    pub fn locate(&self, m: &Rational) -> Option<Ordering> {
        let m = Real::rational(m.clone());
        match m.compare(&self.m_d)? {
            Ordering::Less => Some(Ordering::Less),
            _ => match m.compare(&self.big_m_d)? {
                Ordering::Less => Some(Ordering::Equal),
                _ => Some(Ordering::Greater),
            },
        }
    }
}

/// Zero of a function of `m` with a single sign change above 1.
pub fn solve_in_m<F>(mut sign_at: F, tol: &Rational) -> Result<Real>
where
    F: FnMut(&Rational) -> Option<Ordering>,
{
    let lo = Rational::one() + Rational::new(1.into(), pow2(10));
    let low_sign = sign_at(&lo);
    let mut hi = Rational::from_integer(pow2(16));
    let mut bits = 16;
    while sign_at(&hi) == low_sign && low_sign.is_some() {
        if bits >= GROWTH_LIMIT {
            return Err(Error::NoSignChange { lo: lo.to_string(), hi: hi.to_string() });
        }
        hi *= Rational::from_integer(16.into());
        bits += 4;
    }
    solve_monotone(sign_at, lo, hi, tol, None)
}

fn context_sign(m: &Rational, f: impl Fn(&MContext) -> Option<Ordering>) -> Option<Ordering> {
    MContext::new(m).ok().as_ref().and_then(f)
}

/// The `m` where the word first becomes suitable: `p'_m = P_m`.
pub fn lower_end(form: &BlockForm, tol: &Rational) -> Result<Real> {
    solve_in_m(|m| context_sign(m, |ctx| ctx.suitability_sign(form)), tol)
}

/// The `m` where `p''_m = P_m` for the derived word given.
pub fn upper_end(derived: &BlockForm, tol: &Rational) -> Result<Real> {
    solve_in_m(|m| context_sign(m, |ctx| ctx.upper_sign(derived)), tol)
}

/// `pi_q` of the words `d`, `1 - d` and `1 - d'` with bits read as digits.
fn bit_sums<F: Field>(form: &BlockForm, derived: &BlockForm, q: &F) -> Option<(F, F, F)> {
    let plain = DigitMap { one: Rational::one(), zero: Rational::default() };
    let flipped = DigitMap { one: Rational::default(), zero: Rational::one() };
    Some((eval_form(form, &plain, q)?, eval_form(form, &flipped, q)?, eval_form(derived, &flipped, q)?))
}

/// The `m` with `p'_m = q`, namely `(1 + B)/(1 - A)` with `pi_q(delta) = m A + B`.
fn m_with_p_prime<F: Field>(form: &BlockForm, derived: &BlockForm, q: &F) -> Option<F> {
    let (a, b, _) = bit_sums(form, derived, q)?;
    let one = q.one_like();
    one.plus(&b).divide(&one.minus(&a))
}

/// Sign of `m(p' = q) - m(p'' = q)`, decreasing in `q`.
fn balance_sign_in<F: Field>(form: &BlockForm, derived: &BlockForm, q: &F) -> Option<Ordering> {
    let (a, b, c) = bit_sums(form, derived, q)?;
    let one = q.one_like();
    one.plus(&b).times(&c).minus(&one.minus(&a).times(&one.plus(&c))).sign()
}

fn balance_sign(form: &BlockForm, derived: &BlockForm, q: &Rational) -> Option<Ordering> {
    balance_sign_in(form, derived, &F64Interval::from_rational(q))
        .or_else(|| PRECISIONS.iter().find_map(|&prec| balance_sign_in(form, derived, &RoundedInterval::from_rational(q, prec))))
        .or_else(|| balance_sign_in(form, derived, q))
}

fn m_enclosure(form: &BlockForm, derived: &BlockForm, q: &Rational) -> Option<Interval> {
    PRECISIONS
        .iter()
        .find_map(|&prec| m_with_p_prime(form, derived, &RoundedInterval::from_rational(q, prec)))
        .map(RoundedInterval::into_interval)
}

/// The `m` where `p'_m = p''_m`, found as the common base `q` of the two
/// equations, both linear in `m`.
pub fn balance_point(d: &AdmissibleSeq, tol: &Rational) -> Result<Real> {
    let form = d.block_form().ok_or(Error::NotMaterializable)?;
    let derived = d.derived_form()?;
    let (mut lo, mut hi) = (Rational::from_integer(2.into()), Rational::new(5.into(), 2.into()));
    let mut q_tol = tol.clone();
    loop {
        let root = bisect(|q| balance_sign(&form, &derived, q), lo, hi, &q_tol)?;
        if let Some(q) = root.exact {
            let m = m_with_p_prime(&form, &derived, &q).ok_or_else(|| Error::Undecided(q.to_string()))?;
            return Ok(Real::rational(m));
        }
        let (q_lo, q_hi) = (root.bracket.lo().clone(), root.bracket.hi().clone());
        let undecided = || Error::Undecided(format!("m at {}", root.bracket.midpoint_f64()));
        let below = m_enclosure(&form, &derived, &q_hi).ok_or_else(undecided)?;
        let above = m_enclosure(&form, &derived, &q_lo).ok_or_else(undecided)?;
        let m = Interval::new(below.lo().clone(), above.hi().clone());
        if m.width() <= *tol {
            let guess = simplest_between(m.lo(), m.hi());
            if guess.denom() <= &SMALL_DENOMINATOR.into() && compare_roots(d, &guess, tol)? == Some(Ordering::Equal) {
                return Ok(Real::rational(guess));
            }
            return Ok(Real::Approx(m));
        }
        (lo, hi) = (q_lo, q_hi);
        q_tol = &q_tol * Rational::new(1.into(), pow2(8));
    }
}

/// Endpoints of `I_d` and the minimum point `mu_d` for `d = 0^inf` or `d`
/// of finite type.
pub fn component_interval(d: &AdmissibleSeq, tol: &Rational) -> Result<ComponentInterval> {
    let form = match d {
        AdmissibleSeq::Zero => d.block_form().ok_or(Error::NotMaterializable)?,
        AdmissibleSeq::Finite(s) if s.h.is_empty() => return Err(Error::AllOnes),
        AdmissibleSeq::Finite(s) => periodic_form(&s.h),
        other => {
            return Err(Error::InvalidInput(format!("component intervals need a finite-type sequence, got {other}")));
        }
    };
    Ok(ComponentInterval {
        d: d.clone(),
        m_d: lower_end(&form, tol)?,
        mu_d: balance_point(d, tol)?,
        big_m_d: upper_end(&d.derived_form()?, tol)?,
    })
}

/// `[m_e, m_d)` for `e = h 1^inf` and `d = S(N,1)^inf`: the `m` whose
/// sequence starts with `S(N,1)` and has not yet terminated.
pub fn prefix_bracket(h: &[u64], tol: &Rational) -> Result<(Real, Real)> {
    Ok((lower_end(&ones_tail_form(h), tol)?, lower_end(&periodic_form(h), tol)?))
}
