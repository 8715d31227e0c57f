//! The bases `p'_m` and `p''_m` of an admissible sequence.

use std::cmp::Ordering;

use num_traits::One;

use super::eval::{sign_vs, Base, DigitMap};
use crate::error::{Error, Result};
use crate::numeric::rational::pow2;
use crate::numeric::{solve_monotone, Poly, Rational, Real};
use crate::words::{AdmissibleSeq, BlockForm};

/// Words up to this length also get an exact equation for root recognition.
const EQUATION_LIMIT: u128 = 64;

fn equation(form: &BlockForm, digits: &DigitMap, value: &Rational) -> Option<Poly> {
    if form.total_len() > EQUATION_LIMIT {
        return None;
    }
    let w = form.materialize().ok()?;
    let map = |b: &u8| if *b == 1 { digits.one.clone() } else { digits.zero.clone() };
    let pre: Vec<Rational> = w.preperiod().iter().map(map).collect();
    let per: Vec<Rational> = w.period().iter().map(map).collect();
    Some(Poly::for_series_value(&pre, &per, value))
}

/// The base `q` in `[lo, hi]` with `pi_q(word) = value`.
fn solve_base(form: &BlockForm, digits: &DigitMap, value: &Rational, lo: Rational, hi: Rational, tol: &Rational) -> Result<Real> {
    let sign_at = |q: &Rational| sign_vs(form, digits, &Base::Rational(q.clone()), value);
    solve_monotone(sign_at, lo, hi, tol, equation(form, digits, value).as_ref())
}

fn check(d: &AdmissibleSeq, m: &Rational) -> Result<()> {
    if d.is_all_ones() {
        return Err(Error::AllOnes);
    }
    if *m <= Rational::one() {
        return Err(Error::InvalidInput(format!("m must exceed 1, got {m}")));
    }
    Ok(())
}

/// `p'_m`: the base with `pi_q(delta) = m - 1`.
pub fn p_prime(d: &AdmissibleSeq, m: &Rational, tol: &Rational) -> Result<Real> {
    check(d, m)?;
    let form = d.block_form().ok_or(Error::NotMaterializable)?;
    let inv = Rational::one() / (m - Rational::one());
    let lo = Rational::one() + &inv;
    let hi = Rational::from_integer(2.into()) + &inv;
    solve_base(&form, &DigitMap::delta(m), &(m - Rational::one()), lo, hi, tol)
}

/// `p''_m`: the base with `pi_q(m - delta') = 1`.
pub fn p_double_prime(d: &AdmissibleSeq, m: &Rational, tol: &Rational) -> Result<Real> {
    check(d, m)?;
    let form = d.derived_form()?;
    let lo = Rational::one() + Rational::new(1.into(), pow2(30));
    let q_max = Rational::from_integer(2.into()) + Rational::one() / (m - Rational::one());
    let hi = q_max.max(m.clone());
    solve_base(&form, &DigitMap::conjugate_delta(m), &Rational::one(), lo, hi, tol)
}

/// Certified order of `p'_m` and `p''_m`, tightening the enclosures as needed.
pub fn compare_roots(d: &AdmissibleSeq, m: &Rational, tol: &Rational) -> Result<Option<Ordering>> {
    let mut tol = tol.clone();
    for _ in 0..4 {
        let a = p_prime(d, m, &tol)?;
        let b = p_double_prime(d, m, &tol)?;
        if let Some(o) = a.compare(&b) {
            return Ok(Some(o));
        }
        tol = &tol * &tol * Rational::new(1.into(), pow2(8));
    }
    Ok(None)
}
