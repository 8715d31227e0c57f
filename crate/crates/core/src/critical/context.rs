use std::cmp::Ordering;

use num_traits::One;

use super::eval::{sign_vs, Base, DigitMap};
use crate::error::{Error, Result};
use crate::numeric::{QuadExt, Rational};
use crate::words::BlockForm;

/// `P_m = 1 + sqrt(m/(m-1))`, exactly.
pub fn big_p(m: &Rational) -> Result<QuadExt> {
    if *m <= Rational::one() {
        return Err(Error::InvalidInput(format!("m must exceed 1, got {m}")));
    }
    QuadExt::new(Rational::one(), Rational::one(), m / (m - Rational::one()))
}

/// Quantities tied to one value of `m`.
#[derive(Clone, Debug)]
pub struct MContext {
    pub m: Rational,
    pub big_p: QuadExt,
    base: Base,
    target: Rational,
    delta: DigitMap,
    conjugate: DigitMap,
}

impl MContext {
    pub fn new(m: &Rational) -> Result<Self> {
        let big_p = big_p(m)?;
        Ok(MContext {
            m: m.clone(),
            base: Base::Quad(big_p.clone()),
            big_p,
            target: m - Rational::one(),
            delta: DigitMap::delta(m),
            conjugate: DigitMap::conjugate_delta(m),
        })
    }

    /// Sign of `pi_{P_m}(delta) - (m - 1)` for the word `d`.
    pub fn suitability_sign(&self, d: &BlockForm) -> Option<Ordering> {
        sign_vs(d, &self.delta, &self.base, &self.target)
    }

    /// Whether `d` satisfies `pi_{P_m}(delta) <= m - 1`.
    pub fn suitable(&self, d: &BlockForm) -> Option<bool> {
        self.suitability_sign(d).map(|s| s != Ordering::Greater)
    }

    /// Sign of `pi_{P_m}(m - delta') - 1` for a derived word `d'`.
    pub fn upper_sign(&self, derived: &BlockForm) -> Option<Ordering> {
        sign_vs(derived, &self.conjugate, &self.base, &Rational::one())
    }
}
