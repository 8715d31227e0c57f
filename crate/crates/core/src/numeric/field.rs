use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::{Signed, Zero};

use super::rational::Rational;

/// Arithmetic shared by the exact and the enclosure-based number types.
///
/// Constants are lifted through an existing value so that context (a radicand,
/// a rounding precision) carries over without global state. `sign` returns
/// `None` only when the representation cannot decide it (an enclosure that
/// straddles zero).
pub trait Field: Clone + Debug {
    fn lift(&self, x: &Rational) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn recip(&self) -> Option<Self>;
    fn sign(&self) -> Option<Ordering>;

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|inv| self.times(&inv))
    }

    fn zero_like(&self) -> Self {
        self.lift(&Rational::zero())
    }

    fn one_like(&self) -> Self {
        self.lift(&num_traits::One::one())
    }
}

impl Field for Rational {
    fn lift(&self, x: &Rational) -> Self {
        x.clone()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| num_traits::Inv::inv(self))
    }

    fn sign(&self) -> Option<Ordering> {
        Some(if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        })
    }
}
