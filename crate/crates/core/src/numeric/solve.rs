use std::cmp::Ordering;

use super::bisect::bisect;
use super::poly::{recognize_root, Poly};
use super::rational::Rational;
use super::real::Real;
use crate::error::Result;

/// Zero of a strictly monotone function on `[lo, hi]`, pinned exactly when
/// the bracket holds a simple rational zero or a zero of `equation` of degree
/// at most two.
pub fn solve_monotone<F>(mut sign_at: F, lo: Rational, hi: Rational, tol: &Rational, equation: Option<&Poly>) -> Result<Real>
where
    F: FnMut(&Rational) -> Option<Ordering>,
{
    let root = bisect(&mut sign_at, lo, hi, tol)?;
    if let Some(x) = root.exact {
        return Ok(Real::rational(x));
    }
    Ok(match recognize_root(&root.bracket, equation, &mut sign_at) {
        Some(x) => Real::Exact(x),
        None => Real::Approx(root.bracket),
    })
}
