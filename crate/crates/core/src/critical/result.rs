//! `p_m` with everything computed along the way, and its batch forms.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use rayon::prelude::*;

use super::component::prefix_bracket;
use super::context::MContext;
use super::roots::{p_double_prime, p_prime};
use super::search::sequence_for_m;
use crate::error::{Error, Result};
use crate::expand::Alphabet;
use crate::numeric::{Rational, Real};
use crate::words::admissible::periodic_form;
use crate::words::AdmissibleSeq;

/// Whether `m` belongs to the Cantor set `C = {m : p_m = P_m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
    DepthLimited,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::DepthLimited => "depth-limited",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Resolved,
    DepthLimited,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Resolved => "resolved",
            Status::DepthLimited => "depth-limited",
        })
    }
}

/// Everything computed for one value of `m`.
///
/// For depth-limited searches `p_prime` and `p_double_prime` belong to the
/// last suitable candidate `h 1^inf`, `p` encloses `[p'(h 1^inf), P_m]` and
/// `bracket` holds the range of `m` sharing the searched prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalResult {
    pub m: Rational,
    pub d: AdmissibleSeq,
    pub p_prime: Real,
    pub p_double_prime: Real,
    pub p: Real,
    pub big_p: Real,
    pub in_c: Membership,
    pub status: Status,
    /// `m < 2`, outside the range where `p_m` is the critical base.
    pub small_m: bool,
    pub bracket: Option<(Real, Real)>,
}

/// Options shared by every `p_m` computation.
#[derive(Clone, Debug)]
pub struct Settings {
    pub tol: Rational,
    pub max_depth: usize,
    pub allow_small_m: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tol: Rational::new(1.into(), 1_000_000_000_000i64.into()),
            max_depth: super::search::DEFAULT_SEARCH_DEPTH,
            allow_small_m: false,
        }
    }
}

fn check_m(m: &Rational, allow_small_m: bool) -> Result<bool> {
    let golden = m * m - m - Rational::one();
    if *m <= Rational::one() || golden < Rational::default() {
        return Err(Error::SmallM(format!("{m} is below (1+sqrt(5))/2")));
    }
    let small = *m < Rational::from_integer(2.into());
    if small && !allow_small_m {
        return Err(Error::SmallM(format!("{m} is below 2 and small m is not enabled")));
    }
    Ok(small)
}

/// Replaces an enclosure by `P_m` when the theory says they coincide and
/// the enclosure agrees.
fn snap_to_big_p(p: Real, big_p: &Real) -> Real {
    if !p.is_exact() && p.enclose(128).contains_interval(&big_p.enclose(256)) {
        big_p.clone()
    } else {
        p
    }
}

fn membership(ctx: &MContext, d: &AdmissibleSeq) -> Membership {
    match d {
        AdmissibleSeq::Zero => Membership::No,
        AdmissibleSeq::InfiniteResolved(_) => Membership::Yes,
        AdmissibleSeq::InfinitePrefix(_) => Membership::DepthLimited,
        AdmissibleSeq::Finite(s) => match ctx.suitability_sign(&periodic_form(&s.h)) {
            Some(Ordering::Equal) => Membership::Yes,
            Some(_) => Membership::No,
            None => Membership::DepthLimited,
        },
    }
}

/// The critical base `p_m` of the alphabet `{0, 1, m}`.
pub fn p_m(m: &Rational, settings: &Settings) -> Result<CriticalResult> {
    let small_m = check_m(m, settings.allow_small_m)?;
    let ctx = MContext::new(m)?;
    let big_p = Real::Exact(ctx.big_p.clone());
    let d = sequence_for_m(&ctx, settings.max_depth)?;
    let tol = &settings.tol;
    let in_c = membership(&ctx, &d);
    if let AdmissibleSeq::InfinitePrefix(spec) = &d {
        let candidate = AdmissibleSeq::ones_tail(spec.h.clone())?;
        let p_prime = p_prime(&candidate, m, tol)?;
        let p_double_prime = p_double_prime(&candidate, m, tol)?;
        let lower = p_prime.enclose(128).lo().clone();
        let upper = big_p.enclose(128).hi().clone();
        return Ok(CriticalResult {
            m: m.clone(),
            p: Real::Approx(crate::numeric::Interval::new(lower, upper)),
            bracket: Some(prefix_bracket(&spec.h, tol)?),
            d,
            p_prime,
            p_double_prime,
            big_p,
            in_c,
            status: Status::DepthLimited,
            small_m,
        });
    }
    let p_prime = p_prime(&d, m, tol)?;
    let p_double_prime = p_double_prime(&d, m, tol)?;
    let mut p = p_prime.max(&p_double_prime);
    if in_c == Membership::Yes {
        p = snap_to_big_p(p, &big_p);
    }
    Ok(CriticalResult {
        m: m.clone(),
        d,
        p_prime,
        p_double_prime,
        p,
        big_p,
        in_c,
        status: Status::Resolved,
        small_m,
        bracket: None,
    })
}

/// Membership of `m` in `C` without solving for the bases.
pub fn in_cantor(m: &Rational, max_depth: usize) -> Result<Membership> {
    check_m(m, false)?;
    let ctx = MContext::new(m)?;
    let d = sequence_for_m(&ctx, max_depth)?;
    Ok(membership(&ctx, &d))
}

/// The generalized golden ratio of a three-letter alphabet.
pub fn ternary_g(alphabet: &Alphabet, settings: &Settings) -> Result<CriticalResult> {
    let (m, _) = alphabet.ternary_normal_form()?;
    p_m(&m, settings)
}

/// One row per integer `m` in `[lo, hi]`, in increasing order.
pub fn table(lo: u64, hi: u64, settings: &Settings) -> Result<Vec<CriticalResult>> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidInput(format!("table range needs 2 <= lo <= hi, got {lo}..{hi}")));
    }
    (lo..=hi).into_par_iter().map(|m| p_m(&Rational::from_integer(m.into()), settings)).collect()
}

/// `p_m` sampled at `lo, lo + step, ...` up to `hi`.
pub fn curve(lo: &Rational, hi: &Rational, step: &Rational, settings: &Settings) -> Result<Vec<CriticalResult>> {
    if *step <= Rational::default() || lo > hi {
        return Err(Error::InvalidInput(format!("curve needs lo <= hi and step > 0, got {lo}, {hi}, {step}")));
    }
    let count = ((hi - lo) / step).floor().to_integer();
    let count: u64 = u64::try_from(&count)
        .ok()
        .filter(|&c| c < 1_000_000)
        .ok_or_else(|| Error::InvalidInput(format!("too many samples: {count}")))?;
    (0..=count)
        .into_par_iter()
        .map(|k| p_m(&(lo + step * Rational::from_integer(k.into())), settings))
        .collect()
}
