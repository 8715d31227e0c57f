//! Exact and validated arithmetic.

pub mod bisect;
pub mod fast;
pub mod field;
pub mod interval;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod real;
pub mod solve;

pub use bisect::{bisect, Root};
pub use fast::F64Interval;
pub use field::Field;
pub use interval::{Interval, RoundedInterval};
pub use poly::{recognize_root, Poly};
pub use quad::QuadExt;
pub use rational::{parse_rational, Rational};
pub use real::Real;
pub use solve::solve_monotone;
