//! Admissible sequences: recognition, classification, derived sequences and successors.

use std::cmp::Ordering;
use std::fmt;

use super::blocks::{format_h, BlockForm, HSpec, Tail};
use super::word::BinaryEpw;
use crate::error::{Error, Result};

/// Default number of peeling levels in [`classify`].
pub const DEFAULT_MAX_DEPTH: usize = 64;

/// An admissible binary sequence, by type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AdmissibleSeq {
    /// `0^inf`.
    Zero,
    /// `S(N,1)^inf`; an empty `h` stands for `1^inf`.
    Finite(HSpec),
    /// `S(N,1) S(N,0)^inf`, h-parameters continuing with ones.
    InfiniteResolved(HSpec),
    /// Only known to begin with `S(N,1)`.
    InfinitePrefix(HSpec),
}

impl AdmissibleSeq {
    pub fn finite(h: Vec<u64>) -> Result<Self> {
        Ok(AdmissibleSeq::Finite(HSpec::periodic(h)?))
    }

    /// Canonical infinite-type sequence `h_1 ... h_N 1^inf`.
    pub fn ones_tail(mut h: Vec<u64>) -> Result<Self> {
        while h.last() == Some(&1) {
            h.pop();
        }
        if h.is_empty() {
            h.push(1);
        }
        Ok(AdmissibleSeq::InfiniteResolved(HSpec::ones_tail(h)?))
    }

    pub fn h(&self) -> &[u64] {
        match self {
            AdmissibleSeq::Zero => &[],
            AdmissibleSeq::Finite(s) | AdmissibleSeq::InfiniteResolved(s) | AdmissibleSeq::InfinitePrefix(s) => &s.h,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            AdmissibleSeq::Zero => "zero",
            AdmissibleSeq::Finite(_) => "finite",
            AdmissibleSeq::InfiniteResolved(_) => "infinite",
            AdmissibleSeq::InfinitePrefix(_) => "prefix",
        }
    }

    pub fn is_all_ones(&self) -> bool {
        matches!(self, AdmissibleSeq::Finite(s) if s.h.is_empty())
    }

    pub fn is_finite_type(&self) -> bool {
        matches!(self, AdmissibleSeq::Finite(_))
    }

    /// The sequence as blocks; `None` for prefix-only sequences.
    pub fn block_form(&self) -> Option<BlockForm> {
        match self {
            AdmissibleSeq::Zero => Some(BlockForm { h: vec![], pre: vec![], per: vec![(0, 0)] }),
            AdmissibleSeq::Finite(s) | AdmissibleSeq::InfiniteResolved(s) => s.block_form().ok(),
            AdmissibleSeq::InfinitePrefix(_) => None,
        }
    }

    pub fn word(&self) -> Result<BinaryEpw> {
        self.block_form().ok_or(Error::NotMaterializable)?.materialize()
    }

    /// Block form of the derived sequence `d'`.
    pub fn derived_form(&self) -> Result<BlockForm> {
        match self {
            AdmissibleSeq::Zero => Ok(BlockForm { h: vec![], pre: vec![], per: vec![(0, 0)] }),
            AdmissibleSeq::Finite(s) if s.h.is_empty() => Err(Error::AllOnes),
            AdmissibleSeq::Finite(s) => {
                let n = s.depth();
                Ok(BlockForm { h: s.h.clone(), pre: (1..n).map(|j| (j, 0)).collect(), per: vec![(n, 1)] })
            }
            AdmissibleSeq::InfiniteResolved(s) => {
                // S(N,1) = 1 S(1,0) ... S(N,0), so one shift leaves S(1,0) ... S(N,0) S(N,0)^inf
                let n = s.depth();
                Ok(BlockForm { h: s.h.clone(), pre: (1..=n).map(|j| (j, 0)).collect(), per: vec![(n, 0)] })
            }
            AdmissibleSeq::InfinitePrefix(_) => Err(Error::NotMaterializable),
        }
    }
}

impl fmt::Display for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibleSeq::Zero => write!(f, "0^inf"),
            AdmissibleSeq::Finite(s) => write!(f, "finite h={}", format_h(&s.h)),
            AdmissibleSeq::InfiniteResolved(s) => write!(f, "infinite h={} 1^inf", format_h(&s.h)),
            AdmissibleSeq::InfinitePrefix(s) => write!(f, "prefix h={} ...", format_h(&s.h)),
        }
    }
}

/// Whether `0 d_2 d_3 ... <= d_{n+1} d_{n+2} ... <= d_1 d_2 ...` for every `n >= 0`.
pub fn is_admissible(w: &BinaryEpw) -> bool {
    if w.preperiod().iter().chain(w.period()).any(|&b| b > 1) {
        return false;
    }
    let lower = w.shift(1).prepend(&[0]);
    w.tails().all(|t| t.compare(w) != Ordering::Greater && t.compare(&lower) != Ordering::Less)
}

/// Recovers the h-parameters of an admissible word by peeling blocks level by level.
pub fn classify(w: &BinaryEpw, max_depth: usize) -> Result<AdmissibleSeq> {
    if !is_admissible(w) {
        return Err(Error::NotAdmissible(w.to_string()));
    }
    if *w == BinaryEpw::constant(0) {
        return Ok(AdmissibleSeq::Zero);
    }
    // tokens: 1 stands for S(j,1), 0 for S(j,0)
    let mut tokens = w.clone();
    let mut h = Vec::new();
    loop {
        if tokens == BinaryEpw::constant(1) {
            return AdmissibleSeq::finite(h);
        }
        if tokens.preperiod() == [1] && tokens.period() == [0] {
            return AdmissibleSeq::ones_tail(h);
        }
        if h.len() >= max_depth {
            return Err(Error::Internal(format!("classification of {w} did not resolve in {max_depth} levels")));
        }
        let hj = tokens.digits().take_while(|&&t| t == 1).count();
        if hj == 0 {
            return Err(Error::NotAdmissible(w.to_string()));
        }
        tokens = regroup(&tokens, hj).ok_or_else(|| Error::NotAdmissible(w.to_string()))?;
        h.push(hj as u64);
    }
}

/// Rewrites a token word over `S(j,·)` as a token word over `S(j+1,·)`.
fn regroup(tokens: &BinaryEpw, hj: usize) -> Option<BinaryEpw> {
    let per = tokens.period();
    let last_zero = per.iter().rposition(|&t| t == 0)?;
    // make both parts end right after a 0 token
    let mut pre = tokens.preperiod().to_vec();
    pre.extend_from_slice(&per[..=last_zero]);
    let mut cycle = per[last_zero + 1..].to_vec();
    cycle.extend_from_slice(&per[..=last_zero]);
    let group = |part: &[u8]| -> Option<Vec<u8>> {
        part.split_inclusive(|&t| t == 0)
            .map(|run| match run.len() - 1 {
                r if r == hj => Some(1),
                r if r + 1 == hj => Some(0),
                _ => None,
            })
            .collect()
    };
    BinaryEpw::new(group(&pre)?, group(&cycle)?).ok()
}

/// `S(1,0) ... S(N-1,0) S(N,1)^inf` for finite type, the one-step shift otherwise.
pub fn derived(d: &AdmissibleSeq) -> Result<BinaryEpw> {
    d.derived_form()?.materialize()
}

/// The smallest admissible sequence above a finite-type `d`.
pub fn successor(d: &AdmissibleSeq) -> Result<AdmissibleSeq> {
    match d {
        AdmissibleSeq::Finite(s) if s.h.is_empty() => Err(Error::AllOnes),
        AdmissibleSeq::Finite(s) => {
            let mut h = s.h.clone();
            if let Some(last) = h.last_mut() {
                *last += 1;
            }
            AdmissibleSeq::ones_tail(h)
        }
        other => Err(Error::InvalidInput(format!("successor needs a finite-type sequence, got {other}"))),
    }
}

/// `h_1 ... h_N 1^inf` as a block form, whatever the trailing entries are.
pub fn ones_tail_form(h: &[u64]) -> BlockForm {
    let n = h.len();
    BlockForm { h: h.to_vec(), pre: vec![(n, 1)], per: vec![(n, 0)] }
}

/// `S(N,1)^inf` as a block form.
pub fn periodic_form(h: &[u64]) -> BlockForm {
    BlockForm { h: h.to_vec(), pre: vec![], per: vec![(h.len(), 1)] }
}

pub fn prefix_spec(h: Vec<u64>) -> HSpec {
    HSpec { h, tail: Tail::Prefix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::blocks::materialize;
    use crate::words::word::binary;

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&BinaryEpw::constant(0)));
        assert!(is_admissible(&binary("", "11010").unwrap()));
        assert!(!is_admissible(&binary("", "01").unwrap()));
        assert!(is_admissible(&BinaryEpw::constant(1)));
        assert!(!is_admissible(&binary("10", "1").unwrap()));
    }

    #[test]
    fn classify_examples() {
        let c = |pre, per| classify(&binary(pre, per).unwrap(), DEFAULT_MAX_DEPTH).unwrap();
        assert_eq!(c("", "10"), AdmissibleSeq::finite(vec![1]).unwrap());
        assert_eq!(c("", "11011010"), AdmissibleSeq::finite(vec![2, 2]).unwrap());
        assert_eq!(c("1", "0"), AdmissibleSeq::ones_tail(vec![1]).unwrap());
        assert_eq!(c("", "0"), AdmissibleSeq::Zero);
        assert_eq!(c("", "1"), AdmissibleSeq::finite(vec![]).unwrap());
        assert_eq!(c("", "11010"), AdmissibleSeq::finite(vec![2, 1]).unwrap());
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived(&AdmissibleSeq::Zero).unwrap(), BinaryEpw::constant(0));
        let d10 = AdmissibleSeq::finite(vec![1]).unwrap();
        assert_eq!(derived(&d10).unwrap(), binary("", "10").unwrap());
        let d22 = AdmissibleSeq::finite(vec![2, 2]).unwrap();
        let expected = binary("10", "11011010").unwrap();
        assert_eq!(derived(&d22).unwrap(), expected);
        assert_eq!(d22.word().unwrap().shift(6), expected);
        assert_eq!(derived(&AdmissibleSeq::finite(vec![]).unwrap()), Err(Error::AllOnes));
    }

    #[test]
    fn successor_examples() {
        let s = successor(&AdmissibleSeq::finite(vec![1]).unwrap()).unwrap();
        assert_eq!(s, AdmissibleSeq::ones_tail(vec![2]).unwrap());
        assert_eq!(s.word().unwrap(), binary("110", "10").unwrap());
        let s = successor(&AdmissibleSeq::finite(vec![2]).unwrap()).unwrap();
        assert_eq!(s.word().unwrap(), binary("1", "110").unwrap());
        let s = successor(&AdmissibleSeq::finite(vec![3, 1]).unwrap()).unwrap();
        assert_eq!(s.word().unwrap(), binary("1110", "1110110").unwrap());
        let hs = HSpec::ones_tail(vec![3, 2]).unwrap();
        assert_eq!(s.word().unwrap(), materialize(&hs).unwrap());
    }
}
