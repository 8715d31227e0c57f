//! Depth-bounded enumeration of all expansions of a number.

use num_traits::One;

use super::alphabet::Alphabet;
use crate::numeric::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Enumeration {
    /// Prefixes in decreasing lexicographic order.
    pub prefixes: Vec<Vec<Rational>>,
    /// Set when more than `cap` prefixes exist.
    pub overflow: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep only prefixes of expansions that do not end in `a_1^inf`.
    pub infinite_only: bool,
}

struct Search<'a> {
    q: &'a Rational,
    digits: &'a [Rational],
    low: Rational,
    high: Rational,
    depth: usize,
    cap: usize,
    strict_low: bool,
    out: Enumeration,
}

impl Search<'_> {
    fn feasible(&self, r: &Rational) -> bool {
        let above = if self.strict_low { r > &self.low } else { r >= &self.low };
        above && r <= &self.high
    }

    fn descend(&mut self, rest: &Rational, prefix: &mut Vec<Rational>) {
        if self.out.overflow {
            return;
        }
        if prefix.len() == self.depth {
            if self.out.prefixes.len() == self.cap {
                self.out.overflow = true;
            } else {
                self.out.prefixes.push(prefix.clone());
            }
            return;
        }
        let scaled = rest * self.q;
        for a in self.digits.iter().rev() {
            let next = &scaled - a;
            if self.feasible(&next) {
                prefix.push(a.clone());
                self.descend(&next, prefix);
                prefix.pop();
            }
        }
    }
}

/// All length-`depth` prefixes that extend to an expansion of `x` in base `q`,
/// at most `cap` of them. A choice `c_1 ... c_n` survives while the remainder
/// `q^n (x - sum c_i q^-i)` stays within `[a_1/(q-1), a_J/(q-1)]`.
pub fn enumerate_expansions(x: &Rational, q: &Rational, alphabet: &Alphabet, depth: usize, cap: usize) -> Enumeration {
    enumerate_expansions_with(x, q, alphabet, depth, cap, EnumerateOptions::default())
}

pub fn enumerate_expansions_with(
    x: &Rational,
    q: &Rational,
    alphabet: &Alphabet,
    depth: usize,
    cap: usize,
    options: EnumerateOptions,
) -> Enumeration {
    let denom = q - Rational::one();
    let mut search = Search {
        q,
        digits: alphabet.digits(),
        low: alphabet.min() / &denom,
        high: alphabet.max() / &denom,
        depth,
        cap,
        strict_low: options.infinite_only,
        out: Enumeration::default(),
    };
    if search.feasible(x) {
        search.descend(x, &mut Vec::with_capacity(depth));
    }
    search.out
}
