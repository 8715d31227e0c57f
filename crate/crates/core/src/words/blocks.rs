//! The recursive blocks `S(j, 1)`, `S(j, 0)` and the words built from them.

use std::fmt;

use super::word::{BinaryEpw, BinaryWord};
use crate::error::{Error, Result};

/// Longest word that is ever written out digit by digit.
pub const MATERIALIZE_LIMIT: u128 = 1 << 24;

/// How an h-parameter list continues after its last entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    /// `S(N, 1)^inf`.
    PurePeriodic,
    /// `h_1 ... h_N 1 1 1 ...`, i.e. `S(N, 1) S(N, 0)^inf`.
    OnesTail,
    /// Only the leading block `S(N, 1)` is known.
    Prefix,
}

/// A list of positive integers `h_1 ... h_N` with a tail tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSpec {
    pub h: Vec<u64>,
    pub tail: Tail,
}

impl HSpec {
    pub fn new(h: Vec<u64>, tail: Tail) -> Result<Self> {
        if h.contains(&0) {
            return Err(Error::InvalidInput("h-parameters must be positive".into()));
        }
        Ok(HSpec { h, tail })
    }

    pub fn periodic(h: Vec<u64>) -> Result<Self> {
        Self::new(h, Tail::PurePeriodic)
    }

    pub fn ones_tail(h: Vec<u64>) -> Result<Self> {
        Self::new(h, Tail::OnesTail)
    }

    pub fn depth(&self) -> usize {
        self.h.len()
    }

    /// Block lengths `(|S(j,1)|, |S(j,0)|)` for `j = 0..=N`.
    pub fn lengths(&self) -> Vec<(u128, u128)> {
        block_lengths(&self.h)
    }

    /// The sequence as a concatenation of blocks.
    pub fn block_form(&self) -> Result<BlockForm> {
        let n = self.depth();
        let h = self.h.clone();
        match self.tail {
            Tail::PurePeriodic => Ok(BlockForm { h, pre: vec![], per: vec![(n, 1)] }),
            Tail::OnesTail => Ok(BlockForm { h, pre: vec![(n, 1)], per: vec![(n, 0)] }),
            Tail::Prefix => Err(Error::NotMaterializable),
        }
    }
}

impl fmt::Display for HSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_h(&self.h))?;
        match self.tail {
            Tail::PurePeriodic => write!(f, " inf"),
            Tail::OnesTail => write!(f, " 1^inf"),
            Tail::Prefix => write!(f, " ..."),
        }
    }
}

/// Renders `h` as `(h_1,h_2,...)`.
pub fn format_h(h: &[u64]) -> String {
    let parts: Vec<String> = h.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

/// `(|S(j,1)|, |S(j,0)|)` for `j = 0..=h.len()`, saturating at `u128::MAX`.
pub fn block_lengths(h: &[u64]) -> Vec<(u128, u128)> {
    let mut out = Vec::with_capacity(h.len() + 1);
    out.push((1u128, 1u128));
    for &hj in h {
        let (one, zero) = *out.last().unwrap_or(&(1, 1));
        let hj = hj as u128;
        let l1 = one.saturating_mul(hj).saturating_add(zero);
        let l0 = one.saturating_mul(hj - 1).saturating_add(zero);
        out.push((l1, l0));
    }
    out
}

/// The block `S(j, bit)` built from `h_1 ... h_j`.
pub fn build_block(h: &[u64], j: usize, bit: u8) -> Result<BinaryWord> {
    if j > h.len() {
        return Err(Error::LevelOutOfRange { level: j, available: h.len() });
    }
    if h[..j].contains(&0) {
        return Err(Error::InvalidInput("h-parameters must be positive".into()));
    }
    let (l1, l0) = block_lengths(&h[..j])[j];
    let len = if bit == 1 { l1 } else { l0 };
    if len > MATERIALIZE_LIMIT {
        return Err(Error::TooLong(len));
    }
    let mut one = vec![1u8];
    let mut zero = vec![0u8];
    for &hj in &h[..j] {
        let mut next_zero = Vec::with_capacity(one.len() * (hj as usize - 1) + zero.len());
        for _ in 1..hj {
            next_zero.extend_from_slice(&one);
        }
        next_zero.extend_from_slice(&zero);
        let mut next_one = one;
        next_one.extend_from_slice(&next_zero);
        one = next_one;
        zero = next_zero;
    }
    Ok(BinaryWord(if bit == 1 { one } else { zero }))
}

/// A word `A_1 ... A_k (B_1 ... B_l)^inf` whose pieces are blocks `S(level, bit)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockForm {
    pub h: Vec<u64>,
    pub pre: Vec<(usize, u8)>,
    pub per: Vec<(usize, u8)>,
}

impl BlockForm {
    fn piece_len(lengths: &[(u128, u128)], piece: (usize, u8)) -> u128 {
        let (l1, l0) = lengths[piece.0];
        if piece.1 == 1 {
            l1
        } else {
            l0
        }
    }

    /// Lengths of the preperiod and the period, saturating.
    pub fn lengths(&self) -> (u128, u128) {
        let lengths = block_lengths(&self.h);
        let sum = |pieces: &[(usize, u8)]| {
            pieces.iter().fold(0u128, |acc, &p| acc.saturating_add(Self::piece_len(&lengths, p)))
        };
        (sum(&self.pre), sum(&self.per))
    }

    pub fn total_len(&self) -> u128 {
        let (a, b) = self.lengths();
        a.saturating_add(b)
    }

    pub fn materialize(&self) -> Result<BinaryEpw> {
        let total = self.total_len();
        if total > MATERIALIZE_LIMIT {
            return Err(Error::TooLong(total));
        }
        let expand = |pieces: &[(usize, u8)]| -> Result<Vec<u8>> {
            let mut out = Vec::new();
            for &(level, bit) in pieces {
                out.extend(build_block(&self.h, level, bit)?.0);
            }
            Ok(out)
        };
        BinaryEpw::new(expand(&self.pre)?, expand(&self.per)?)
    }
}

/// The eventually periodic word encoded by a PurePeriodic or OnesTail spec.
pub fn materialize(spec: &HSpec) -> Result<BinaryEpw> {
    spec.block_form()?.materialize()
}
