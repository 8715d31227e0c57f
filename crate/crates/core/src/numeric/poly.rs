//! Exact recognition of roots located by bisection.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::interval::Interval;
use super::quad::QuadExt;
use super::rational::{simplest_between, Rational};

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trimmed(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Polynomial in `q` whose roots above 1 are the solutions of
    /// `sum u_i q^-i + q^-s (sum v_i q^-i) / (1 - q^-t) = c`.
    pub fn for_series_value(pre: &[Rational], per: &[Rational], c: &Rational) -> Self {
        let (s, t) = (pre.len(), per.len());
        let n = s + t;
        // in x = 1/q: (U(x) - c)(1 - x^t) + x^s V(x)
        let mut u = vec![Rational::zero(); s + 1];
        u[0] = -c.clone();
        for (i, d) in pre.iter().enumerate() {
            u[i + 1] = d.clone();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, ui) in u.iter().enumerate() {
            coeffs[i] += ui;
            coeffs[i + t] -= ui;
        }
        for (i, v) in per.iter().enumerate() {
            coeffs[s + i + 1] += v;
        }
        // q^n P(1/q), then drop factors of q
        coeffs.reverse();
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        Self::trimmed(coeffs.split_off(lead))
    }

    /// The root inside `bracket` when the degree is at most two.
    pub fn low_degree_root_in(&self, bracket: &Interval) -> Option<QuadExt> {
        match self.degree()? {
            1 => {
                let root = -&self.0[0] / &self.0[1];
                bracket.contains(&root).then(|| QuadExt::rational(root))
            }
            2 => {
                let (c, b, a) = (&self.0[0], &self.0[1], &self.0[2]);
                let disc = b * b - Rational::from_integer(4.into()) * a * c;
                if disc.is_negative() {
                    return None;
                }
                let two_a = a * Rational::from_integer(2.into());
                let centre = -b / &two_a;
                if disc.is_zero() {
                    return bracket.contains(&centre).then(|| QuadExt::rational(centre));
                }
                let half_width = Rational::from_integer(1.into()) / &two_a;
                [half_width.clone(), -half_width].into_iter().find_map(|w| {
                    let root = QuadExt::new(centre.clone(), w, disc.clone()).ok()?;
                    inside(&root, bracket).then_some(root)
                })
            }
            _ => None,
        }
    }
}

fn inside(x: &QuadExt, bracket: &Interval) -> bool {
    let lo = QuadExt::rational(bracket.lo().clone());
    let hi = QuadExt::rational(bracket.hi().clone());
    x.cmp_exact(&lo) != Ordering::Less && x.cmp_exact(&hi) != Ordering::Greater
}

/// Tries to pin the zero bracketed by `bracket` exactly: first the simplest
/// rational in the bracket, then the low-degree equation if one is supplied.
pub fn recognize_root<F>(bracket: &Interval, equation: Option<&Poly>, mut sign_at: F) -> Option<QuadExt>
where
    F: FnMut(&Rational) -> Option<Ordering>,
{
    let candidate = simplest_between(bracket.lo(), bracket.hi());
    if sign_at(&candidate) == Some(Ordering::Equal) {
        return Some(QuadExt::rational(candidate));
    }
    equation.and_then(|p| p.low_degree_root_in(bracket))
}
