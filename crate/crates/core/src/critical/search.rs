//! The largest admissible sequence satisfying `pi_{P_m}(delta) <= m - 1`.

use std::cmp::Ordering;

use super::context::MContext;
use crate::error::{Error, Result};
use crate::words::admissible::{ones_tail_form, periodic_form, prefix_spec};
use crate::words::AdmissibleSeq;

/// Default number of h-parameters determined before giving up.
pub const DEFAULT_SEARCH_DEPTH: usize = 64;

const GUARD: u64 = 1 << 63;

/// Largest `h_j` such that `h_1 ... h_{j-1} h_j 1^inf` is suitable, assuming
/// `h_j = 1` is. `Ok(None)` when a comparison cannot be decided.
pub fn maximize_h(prefix: &[u64], ctx: &MContext) -> Result<Option<u64>> {
    let mut h = prefix.to_vec();
    h.push(1);
    let mut suitable_at = |hj: u64| {
        *h.last_mut().unwrap_or(&mut 0) = hj;
        ctx.suitable(&ones_tail_form(&h))
    };
    let (mut good, mut bad) = (1u64, 2u64);
    loop {
        match suitable_at(bad) {
            None => return Ok(None),
            Some(false) => break,
            Some(true) if bad >= GUARD => {
                return Err(Error::Internal(format!("h-parameter unbounded at m = {}", ctx.m)));
            }
            Some(true) => {
                good = bad;
                bad *= 2;
            }
        }
    }
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        match suitable_at(mid) {
            None => return Ok(None),
            Some(true) => good = mid,
            Some(false) => bad = mid,
        }
    }
    Ok(Some(good))
}

/// Greedy construction of the admissible sequence attached to `m`: each `h_j`
/// is taken as large as possible, stopping as soon as `S(N,1)^inf` itself is
/// suitable, or when `h_1 ... h_N 1^inf` meets the bound with equality.
pub fn sequence_for_m(ctx: &MContext, max_depth: usize) -> Result<AdmissibleSeq> {
    let mut h: Vec<u64> = Vec::new();
    match ctx.suitability_sign(&ones_tail_form(&h)) {
        None => return Ok(AdmissibleSeq::InfinitePrefix(prefix_spec(h))),
        Some(Ordering::Greater) => return Ok(AdmissibleSeq::Zero),
        Some(Ordering::Equal) => return AdmissibleSeq::ones_tail(h),
        Some(Ordering::Less) => {}
    }
    while h.len() < max_depth {
        let Some(hj) = maximize_h(&h, ctx)? else {
            break;
        };
        h.push(hj);
        match ctx.suitable(&periodic_form(&h)) {
            None => break,
            Some(true) => return AdmissibleSeq::finite(h),
            Some(false) => {}
        }
        if ctx.suitability_sign(&ones_tail_form(&h)) == Some(Ordering::Equal) {
            return AdmissibleSeq::ones_tail(h);
        }
    }
    Ok(AdmissibleSeq::InfinitePrefix(prefix_spec(h)))
}
